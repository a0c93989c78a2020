//! Cell-by-cell check of the even-subalgebra classification against the
//! structural oracle.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::grading::Z2Grading;
use crate::multivector::Multivector;
use crate::signature::Signature;
use crate::Result;

use super::reference::expected_invariants;
use super::structure::{regular_representation, structural_invariants, StructuralInvariants};
use super::tables::{classify_cl0, table4_lookup, AlgebraClass};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table4Cell {
    pub p: usize,
    pub q: usize,
    pub p0: usize,
    pub q0: usize,
    pub grading: Z2Grading,
    /// `Cl(p0,q0) ⊗ Cl+(p-p0,q-q0)` in normal form.
    pub predicted: AlgebraClass,
    /// Direct table entry; `None` for the trivial grading.
    pub table_entry: Option<AlgebraClass>,
    pub observed: StructuralInvariants,
    pub expected: StructuralInvariants,
}

impl Table4Cell {
    pub fn key(&self) -> String {
        format!("{},{},{},{}", self.p, self.q, self.p0, self.q0)
    }

    pub fn passed(&self) -> bool {
        self.observed == self.expected
            && self
                .table_entry
                .as_ref()
                .map_or(true, |t| *t == self.predicted)
    }

    pub fn detail(&self) -> String {
        let table = match &self.table_entry {
            Some(t) => format!("{t}"),
            None => String::from("(trivial grading)"),
        };
        format!(
            "predicted {} / table {}; observed [{}] expected [{}]",
            self.predicted, table, self.observed, self.expected
        )
    }
}

/// Fingerprint of `(Cl0, geometric product)` built from the blade basis.
pub fn observed_cl0_invariants(grading: &Z2Grading) -> Result<StructuralInvariants> {
    let sig = grading.signature();
    let basis: Vec<Multivector> = grading
        .even_subalgebra_basis()
        .into_iter()
        .map(|b| Multivector::blade(sig, b))
        .collect::<Result<_>>()?;
    let sc = regular_representation(&basis, |a, b| a.geometric(b))?;
    structural_invariants(&sc)
}

/// Check one cell using the given grading (which must have counts `p0, q0`).
pub fn table4_cell_for(
    grading: Z2Grading,
    expected_of: &mut impl FnMut(&AlgebraClass) -> StructuralInvariants,
) -> Result<Table4Cell> {
    let sig = grading.signature();
    let counts = grading.counts();
    let (p, q, p0, q0) = (sig.p(), sig.q(), counts.p0, counts.q0);
    let predicted = classify_cl0(p, q, p0, q0)?;
    let table_entry = table4_lookup(p, q, p0, q0)?;
    let observed = observed_cl0_invariants(&grading)?;
    let expected = expected_of(&predicted);
    Ok(Table4Cell {
        p,
        q,
        p0,
        q0,
        grading,
        predicted,
        table_entry,
        observed,
        expected,
    })
}

/// Check one cell with the canonical odd set.
pub fn table4_cell(p: usize, q: usize, p0: usize, q0: usize) -> Result<Table4Cell> {
    let grading = Z2Grading::canonical(Signature::new(p, q)?, p0, q0)?;
    table4_cell_for(grading, &mut |c| expected_invariants(c))
}

/// Every `(p, q, p0, q0)` with `p + q <= max_n`.
pub fn table4_keys(max_n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut keys = Vec::new();
    for n in 0..=max_n {
        for p in 0..=n {
            let q = n - p;
            for p0 in 0..=p {
                for q0 in 0..=q {
                    keys.push((p, q, p0, q0));
                }
            }
        }
    }
    keys
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table4Report {
    pub cells: Vec<Table4Cell>,
}

impl Table4Report {
    pub fn violations(&self) -> usize {
        self.cells.iter().filter(|c| !c.passed()).count()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0
    }

    pub fn cell(&self, p: usize, q: usize, p0: usize, q0: usize) -> Option<&Table4Cell> {
        self.cells
            .iter()
            .find(|c| (c.p, c.q, c.p0, c.q0) == (p, q, p0, q0))
    }
}

/// Sweep every grading choice with `p + q <= max_n`.
pub fn verify_table4(max_n: usize) -> Result<Table4Report> {
    let mut cache: BTreeMap<AlgebraClass, StructuralInvariants> = BTreeMap::new();
    let mut expected_of = |cls: &AlgebraClass| {
        *cache
            .entry(cls.clone())
            .or_insert_with(|| expected_invariants(cls))
    };
    let mut cells = Vec::new();
    for (p, q, p0, q0) in table4_keys(max_n) {
        let grading = Z2Grading::canonical(Signature::new(p, q)?, p0, q0)?;
        cells.push(table4_cell_for(grading, &mut expected_of)?);
    }
    Ok(Table4Report { cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_up_to_three() {
        let report = verify_table4(3).unwrap();
        let expected_cells: usize = (0..=3usize)
            .flat_map(|n| (0..=n).map(move |p| (p + 1) * (n - p + 1)))
            .sum();
        assert_eq!(report.cells.len(), expected_cells);
        for cell in &report.cells {
            assert!(cell.passed(), "{} {}", cell.key(), cell.detail());
        }
        let cl30: Vec<String> = (0..=2)
            .map(|p0| format!("{}", report.cell(3, 0, p0, 0).unwrap().predicted))
            .collect();
        assert_eq!(cl30, ["H", "C (+) C", "M(2,R)"]);
    }

    #[test]
    fn spacetime_row() {
        for (q0, want) in [(0, "M(2,C)"), (3, "H (+) H")] {
            let cell = table4_cell(1, 3, 0, q0).unwrap();
            assert!(cell.passed());
            assert_eq!(format!("{}", cell.predicted), want);
        }
        let full = table4_cell(1, 3, 1, 3).unwrap();
        assert_eq!(full.predicted, super::super::classify_clifford(1, 3));
        assert!(full.passed());
    }
}
