//! Diode-and-switch keyboard matrices and their interrupt-pin wiring.
//!
//! A matrix joins microcontroller pins by switches, each in series with a
//! diode from anode to cathode. Adding an interrupt pin gives every pin `v`
//! an intermediate vertex `v'` that takes over the switches directed at
//! `v` and is joined to `v` by a bare diode; the resulting circuit graph is
//! the great shadow of the pin graph, and it can be routed on a single-sided
//! board exactly when that shadow is planar.
//!
//! Matrix files look like
//!
//! ```text
//! # full Charlieplex on three pins
//! pins=3
//! 0 -> 1 a
//! 1 -> 0 b
//! ```
//!
//! with an optional label after each switch.

use serde::Serialize;
use thiserror::Error;

use crate::embedding::{embed_shadow, render_shadow, EmbeddingError, EmbeddingJson, RenderError};
use crate::graph::{Graph, Vertex};
use crate::shadow::{great_shadow, ShadowGraph};
use crate::witness::{shadow_witness, K33Witness, WitnessError};

pub const INTERRUPT_NOTE: &str = "Edges from each intermediate vertex v' to a shared interrupt vertex are omitted: \
     every v' can carry its own interrupt pin, so the routed circuit is S(G) itself.";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Switch {
    pub anode: Vertex,
    pub cathode: Vertex,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeyboardMatrix {
    pins: usize,
    switches: Vec<Switch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("missing `pins=<n>` header")]
    MissingHeader,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: pin {pin} out of range for {pins} pins")]
    PinOutOfRange { line: usize, pin: Vertex, pins: usize },
    #[error("line {line}: switch joins pin {pin} to itself")]
    SelfLoop { line: usize, pin: Vertex },
    #[error("line {line}: pins {a} and {b} already carry two switches")]
    PairLimit { line: usize, a: Vertex, b: Vertex },
    #[error("line {line}: second switch from {anode} to {cathode}")]
    DuplicateSwitch { line: usize, anode: Vertex, cathode: Vertex },
}

impl KeyboardMatrix {
    /// Validates switches in order; `line` in errors is the 1-based switch
    /// index.
    pub fn new(pins: usize, switches: Vec<Switch>) -> Result<Self, MatrixError> {
        let lines: Vec<usize> = (1..=switches.len()).collect();
        Self::with_lines(pins, switches, &lines)
    }

    fn with_lines(pins: usize, switches: Vec<Switch>, lines: &[usize]) -> Result<Self, MatrixError> {
        let mut seen: std::collections::HashMap<(Vertex, Vertex), u8> = Default::default();
        for (s, &line) in switches.iter().zip(lines) {
            for pin in [s.anode, s.cathode] {
                if pin >= pins {
                    return Err(MatrixError::PinOutOfRange { line, pin, pins });
                }
            }
            if s.anode == s.cathode {
                return Err(MatrixError::SelfLoop { line, pin: s.anode });
            }
            let (a, b) = (s.anode.min(s.cathode), s.anode.max(s.cathode));
            let forward = u8::from(s.anode == a) + 1; // bit 1: a->b, bit 2: b->a
            let mask = seen.entry((a, b)).or_default();
            if *mask == 3 {
                return Err(MatrixError::PairLimit { line, a, b });
            }
            if *mask & forward != 0 {
                return Err(MatrixError::DuplicateSwitch {
                    line,
                    anode: s.anode,
                    cathode: s.cathode,
                });
            }
            *mask |= forward;
        }
        Ok(KeyboardMatrix { pins, switches })
    }

    pub fn pins(&self) -> usize {
        self.pins
    }

    pub fn switches(&self) -> &[Switch] {
        &self.switches
    }

    /// Pins joined when at least one switch runs between them; directions
    /// collapse.
    pub fn graph(&self) -> Graph {
        let mut edges: Vec<(Vertex, Vertex)> = self
            .switches
            .iter()
            .map(|s| (s.anode.min(s.cathode), s.anode.max(s.cathode)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Graph::new(self.pins, edges).expect("validated switches")
    }
}

pub fn parse_matrix(text: &str) -> Result<KeyboardMatrix, MatrixError> {
    let mut pins = None;
    let mut switches = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let syntax = |msg: &str| MatrixError::Syntax {
            line,
            msg: msg.to_string(),
        };
        if pins.is_none() {
            let count = body
                .strip_prefix("pins=")
                .ok_or(MatrixError::MissingHeader)?
                .trim()
                .parse::<usize>()
                .map_err(|_| syntax("pin count is not a number"))?;
            pins = Some(count);
            continue;
        }
        let (anode, rest) = body.split_once("->").ok_or_else(|| syntax("expected `anode -> cathode`"))?;
        let rest = rest.trim();
        let (cathode, label) = match rest.split_once(char::is_whitespace) {
            Some((c, l)) => (c, Some(l.trim().to_string())),
            None => (rest, None),
        };
        let pin = |s: &str| s.trim().parse::<Vertex>().map_err(|_| syntax("pin is not a number"));
        switches.push(Switch {
            anode: pin(anode)?,
            cathode: pin(cathode)?,
            label,
        });
        lines.push(line);
    }
    let pins = pins.ok_or(MatrixError::MissingHeader)?;
    KeyboardMatrix::with_lines(pins, switches, &lines)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum PinRole {
    /// A microcontroller pin of the original matrix.
    Pin { pin: Vertex },
    /// The intermediate vertex of a pin, wired to the interrupt.
    Intermediate { pin: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterruptExpansion {
    pub shadow: ShadowGraph,
    pub roles: Vec<PinRole>,
}

pub fn interrupt_expansion(k: &KeyboardMatrix) -> InterruptExpansion {
    let n = k.pins;
    let roles = (0..n)
        .map(|pin| PinRole::Pin { pin })
        .chain((0..n).map(|pin| PinRole::Intermediate { pin }))
        .collect();
    InterruptExpansion {
        shadow: great_shadow(&k.graph()),
        roles,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Routability {
    SingleSided,
    NotRoutable,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Embedding { embedding: EmbeddingJson, svg: String },
    Witness { witness: K33Witness, offending_pins: Vec<Vertex> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixStats {
    pub pins: usize,
    pub switches: usize,
    /// `n(n-1)`, the Charlieplex maximum.
    pub capacity: usize,
    pub fill: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RoutabilityReport {
    pub verdict: Routability,
    pub certificate: Certificate,
    pub statistics: MatrixStats,
    pub note: &'static str,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
}

pub fn routability_report(k: &KeyboardMatrix) -> Result<RoutabilityReport, ReportError> {
    let g = k.graph();
    let n = k.pins;
    let capacity = n * n.saturating_sub(1);
    let statistics = MatrixStats {
        pins: n,
        switches: k.switches.len(),
        capacity,
        fill: if capacity == 0 { 0.0 } else { k.switches.len() as f64 / capacity as f64 },
    };
    let (verdict, certificate) = match shadow_witness(&g)? {
        None => {
            let embedding = embed_shadow(&g)?.to_json();
            let svg = render_shadow(&g)?.to_svg();
            (Routability::SingleSided, Certificate::Embedding { embedding, svg })
        }
        Some(witness) => {
            let mut offending_pins: Vec<Vertex> = witness
                .delta1
                .iter()
                .chain(&witness.delta2)
                .map(|&x| if x >= n { x - n } else { x })
                .collect();
            offending_pins.sort_unstable();
            offending_pins.dedup();
            (Routability::NotRoutable, Certificate::Witness { witness, offending_pins })
        }
    };
    Ok(RoutabilityReport {
        verdict,
        certificate,
        statistics,
        note: INTERRUPT_NOTE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete;

    const CHARLIEPLEX3: &str = "pins=3\n0 -> 1\n1 -> 0\n0 -> 2\n2 -> 0\n1 -> 2\n2 -> 1\n";

    #[test]
    fn parses_full_charlieplex() {
        let k = parse_matrix(CHARLIEPLEX3).unwrap();
        assert_eq!(k.switches().len(), 6);
        assert_eq!(k.graph(), complete(3));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_matrix("pins=3\n0 -> 1\n0 -> 1 again\n"),
            Err(MatrixError::DuplicateSwitch { line: 3, anode: 0, cathode: 1 })
        ));
        assert!(matches!(
            parse_matrix("pins=2\n0 -> 2\n"),
            Err(MatrixError::PinOutOfRange { pin: 2, .. })
        ));
        assert!(matches!(
            parse_matrix("pins=2\n0 -> 1\n1 -> 0\n0 -> 1\n"),
            Err(MatrixError::PairLimit { line: 4, a: 0, b: 1 })
        ));
        assert_eq!(parse_matrix("0 -> 1\n"), Err(MatrixError::MissingHeader));
        assert!(matches!(parse_matrix("pins=2\n0 1\n"), Err(MatrixError::Syntax { line: 2, .. })));
    }

    #[test]
    fn labels_and_comments() {
        let k = parse_matrix("# test board\npins=4\n0 -> 1 left shift\n1 -> 2 # no label\n2 -> 3\n3 -> 0 z\n").unwrap();
        assert_eq!(k.switches()[0].label.as_deref(), Some("left shift"));
        assert_eq!(k.switches()[1].label, None);
        assert_eq!(k.graph().size(), 4);
    }

    #[test]
    fn expansion_roles() {
        let k = parse_matrix("pins=2\n0 -> 1\n").unwrap();
        let e = interrupt_expansion(&k);
        assert_eq!(e.shadow.graph.size(), 5);
        assert_eq!(e.roles[3], PinRole::Intermediate { pin: 1 });
    }

    #[test]
    fn charlieplex_is_not_routable() {
        let r = routability_report(&parse_matrix(CHARLIEPLEX3).unwrap()).unwrap();
        assert_eq!(r.verdict, Routability::NotRoutable);
        assert!((r.statistics.fill - 1.0).abs() < 1e-12);
        match r.certificate {
            Certificate::Witness { offending_pins, .. } => assert_eq!(offending_pins, vec![0, 1, 2]),
            _ => panic!("expected a witness"),
        }
    }
}
