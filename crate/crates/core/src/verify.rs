//! Cross-evaluator verification.
//!
//! For every exact formula in the catalog this checks, over all length
//! tuples inside a box, that the closed form, the multiplicity (multinomial)
//! sum, and the truncated series all reproduce the table-based count
//! exactly. Checks are independent and fan out across the thread pool in
//! parallel mode; report order is fixed either way.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::engine::{count_multinomial, CountTable};
use crate::error::Result;
use crate::formulas::{catalog, eval_exact, step_set_for, DimSpec, FormulaId};
use crate::genfunc::series_coefficients;
use crate::grid::walk_box;
use crate::par::{maybe_par_map, Parallelism};
use crate::step::{LengthTuple, StepSet, ValidatedStepSet};

/// Which route was compared against the counting table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Formula,
    Multinomial,
    Series,
}

/// Outcome of one verification case.
#[derive(Debug, Clone)]
pub struct CaseReport {
    pub kind: CheckKind,
    /// Display name, e.g. `star (N=2)` or `series {(1,1),(1,2),(2,1)}`.
    pub name: String,
    /// Number of points compared.
    pub checked: usize,
    pub ok: bool,
    /// First mismatch, when not ok.
    pub detail: Option<String>,
}

impl CaseReport {
    fn pass(kind: CheckKind, name: String, checked: usize) -> Self {
        CaseReport { kind, name, checked, ok: true, detail: None }
    }

    fn fail(kind: CheckKind, name: String, checked: usize, detail: String) -> Self {
        CaseReport { kind, name, checked, ok: false, detail: Some(detail) }
    }
}

/// Verifies the whole catalog over boxes with every length at most
/// `max_len`, N up to 3 for the dimension-generic formulas. Returns one
/// report per (formula, dimension) instance plus one series and one
/// multinomial report per distinct step set.
pub fn verify_catalog(max_len: u32, mode: Parallelism) -> Result<Vec<CaseReport>> {
    let mut formula_cases: Vec<(FormulaId, usize)> = Vec::new();
    for info in catalog() {
        if !info.exact {
            continue;
        }
        match info.dimensions {
            DimSpec::Fixed(n) => formula_cases.push((info.id, n)),
            DimSpec::Any => {
                for n in 1..=3 {
                    formula_cases.push((info.id, n));
                }
            }
            DimSpec::None => {}
        }
    }

    // One shared table per distinct step set; also the set list for the
    // series and multinomial sweeps.
    let mut sets: BTreeMap<String, ValidatedStepSet> = BTreeMap::new();
    for &(id, n) in &formula_cases {
        let set = step_set(id, n, max_len)?;
        sets.entry(set.to_string()).or_insert(set);
    }

    enum Job {
        Formula(FormulaId, usize),
        Multinomial(ValidatedStepSet),
        Series(ValidatedStepSet),
    }

    let mut jobs: Vec<Job> = Vec::new();
    for &(id, n) in &formula_cases {
        jobs.push(Job::Formula(id, n));
    }
    for set in sets.values() {
        jobs.push(Job::Multinomial(set.clone()));
        jobs.push(Job::Series(set.clone()));
    }

    Ok(maybe_par_map(mode, jobs, |job| match job {
        Job::Formula(id, n) => verify_formula(id, n, max_len),
        Job::Multinomial(set) => verify_multinomial(&set, max_len),
        Job::Series(set) => verify_series(&set, max_len),
    }))
}

fn step_set(id: FormulaId, dimension: usize, max_len: u32) -> Result<ValidatedStepSet> {
    let set: StepSet =
        step_set_for(id, dimension, max_len).expect("exact catalog entries have step sets");
    set.validate()
}

/// Closed form against the table, over the whole box (or the diagonal for
/// diagonal-only formulas).
pub fn verify_formula(id: FormulaId, dimension: usize, max_len: u32) -> CaseReport {
    let name = format!("{} (N={})", id, dimension);
    let run = || -> Result<CaseReport> {
        let info = crate::formulas::formula_info(id);
        let set = step_set(id, dimension, max_len)?;
        let bounds = LengthTuple::diagonal(max_len, dimension);
        let table = CountTable::fill(&set, &bounds)?;
        let mut checked = 0usize;
        let mut mismatch: Option<String> = None;

        let mut check_at = |lengths: &[u32]| {
            if mismatch.is_some() {
                return;
            }
            let tuple = LengthTuple::new(lengths.to_vec());
            let expected = table.get(lengths).expect("inside the box");
            match eval_exact(id, &tuple) {
                Ok(got) if got == *expected => checked += 1,
                Ok(got) => {
                    mismatch = Some(format!("{}: formula {} vs table {}", tuple, got, expected));
                }
                Err(e) => mismatch = Some(format!("{}: {}", tuple, e)),
            }
        };

        if info.diagonal_only {
            for l in 1..=max_len {
                check_at(&vec![l; dimension]);
            }
        } else {
            let dims = vec![max_len as usize + 1; dimension];
            walk_box(&dims, |_, idx| check_at(idx));
        }

        Ok(match mismatch {
            None => CaseReport::pass(CheckKind::Formula, name.clone(), checked),
            Some(d) => CaseReport::fail(CheckKind::Formula, name.clone(), checked, d),
        })
    };
    run().unwrap_or_else(|e| CaseReport::fail(CheckKind::Formula, name, 0, e.to_string()))
}

/// Multiplicity sum against the table, over the whole box.
pub fn verify_multinomial(set: &ValidatedStepSet, max_len: u32) -> CaseReport {
    let name = format!("multinomial {}", set);
    let run = || -> Result<CaseReport> {
        let dimension = set.dimension();
        let bounds = LengthTuple::diagonal(max_len, dimension);
        let table = CountTable::fill(set, &bounds)?;
        let mut checked = 0usize;
        let mut mismatch: Option<String> = None;
        let dims = vec![max_len as usize + 1; dimension];
        walk_box(&dims, |_, idx| {
            if mismatch.is_some() {
                return;
            }
            let tuple = LengthTuple::new(idx.to_vec());
            let expected = table.get(idx).expect("inside the box");
            match count_multinomial(set, &tuple) {
                Ok(got) if got == *expected => checked += 1,
                Ok(got) => {
                    mismatch =
                        Some(format!("{}: multinomial {} vs table {}", tuple, got, expected));
                }
                Err(e) => mismatch = Some(format!("{}: {}", tuple, e)),
            }
        });
        Ok(match mismatch {
            None => CaseReport::pass(CheckKind::Multinomial, name.clone(), checked),
            Some(d) => CaseReport::fail(CheckKind::Multinomial, name.clone(), checked, d),
        })
    };
    run().unwrap_or_else(|e| CaseReport::fail(CheckKind::Multinomial, name, 0, e.to_string()))
}

/// Truncated series against the table, termwise over the whole box.
pub fn verify_series(set: &ValidatedStepSet, max_len: u32) -> CaseReport {
    let name = format!("series {}", set);
    let run = || -> Result<CaseReport> {
        let bounds = LengthTuple::diagonal(max_len, set.dimension());
        let table = CountTable::fill(set, &bounds)?;
        let series = series_coefficients(set, &bounds)?;
        let mut checked = 0usize;
        let mut mismatch: Option<String> = None;
        series.for_each(|idx, coeff| {
            if mismatch.is_some() {
                return;
            }
            let expected = table.get(idx).expect("inside the box");
            if coeff == expected {
                checked += 1;
            } else {
                mismatch = Some(format!(
                    "{}: series {} vs table {}",
                    LengthTuple::new(idx.to_vec()),
                    coeff,
                    expected
                ));
            }
        });
        Ok(match mismatch {
            None => CaseReport::pass(CheckKind::Series, name.clone(), checked),
            Some(d) => CaseReport::fail(CheckKind::Series, name.clone(), checked, d),
        })
    };
    run().unwrap_or_else(|e| CaseReport::fail(CheckKind::Series, name, 0, e.to_string()))
}

/// Parts-sum consistency: the layered counts summed over k equal the plain
/// count. Used by tests alongside the catalog checks.
pub fn parts_sum_matches(set: &ValidatedStepSet, lengths: &LengthTuple) -> Result<bool> {
    let total = crate::engine::count(set, lengths)?;
    let mut sum = BigUint::from(0u32);
    for k in 0..=lengths.total() {
        sum += crate::engine::count_with_parts(set, lengths, k)?;
    }
    Ok(sum == total)
}
