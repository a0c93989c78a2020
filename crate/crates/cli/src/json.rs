use clifford_grading::{AlgebraClass, StructuralInvariants};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct ComponentJson {
    pub m: usize,
    #[serde(rename = "K")]
    pub ring: &'static str,
}

#[derive(Debug, Serialize)]
pub struct ClassJson {
    pub components: Vec<ComponentJson>,
}

impl From<&AlgebraClass> for ClassJson {
    fn from(cls: &AlgebraClass) -> Self {
        ClassJson {
            components: cls
                .components()
                .iter()
                .map(|c| ComponentJson {
                    m: c.m,
                    ring: c.ring.symbol(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FingerprintJson {
    pub dim: usize,
    pub center_dim: usize,
    pub trace_sig: [usize; 2],
    pub center_trace_sig: [usize; 2],
}

impl From<&StructuralInvariants> for FingerprintJson {
    fn from(i: &StructuralInvariants) -> Self {
        FingerprintJson {
            dim: i.dim,
            center_dim: i.center_dim,
            trace_sig: [i.trace_sig.0, i.trace_sig.1],
            center_trace_sig: [i.center_trace_sig.0, i.center_trace_sig.1],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub key: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub cells: Vec<Cell>,
    pub violations: usize,
}
