//! Closed-form and asymptotic evaluators for the catalogued step-set
//! families, each computable without the counting table so the two routes
//! can be checked against each other.

mod asymptotic;
mod dyadic;
mod exact;

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::step::{BaseSet, LengthTuple, StepSet};

pub use asymptotic::{
    box12_asym, comp_bounded_asym, delannoy_asym, griggs_asym, halfopen_asym, unitcube3_growth,
    whitney_asym, AsymptoticConstants,
};
pub use dyadic::{duchi_diag, duchi_diag_with_residual, dyadic_sum, dyadic_sum_with_residual};
pub use exact::{
    andrews, box12_exact, box13_exact, comp_closed, delannoy_exact, halfopen_exact, slowinski,
    star, starstar, whitney_exact, DelannoyVariant,
};

/// Identifiers for the formula catalog. String forms are the snake_case
/// names used on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    CompAll,
    Comp12,
    CompGe2,
    CompOdd,
    CompBoundedAsym,
    DelannoyPowers,
    DelannoyTrinomial,
    DelannoyAsym,
    Star,
    StarStar,
    WhitneyExact,
    WhitneyAsym,
    HalfopenExact,
    HalfopenAsym,
    Box13Exact,
    Slowinski,
    DyadicSum,
    GriggsAsym,
    Andrews,
    DuchiDiag,
    Box12Exact,
    Box12Asym,
    UnitCube3Growth,
}

impl FormulaId {
    pub const ALL: [FormulaId; 23] = [
        FormulaId::CompAll,
        FormulaId::Comp12,
        FormulaId::CompGe2,
        FormulaId::CompOdd,
        FormulaId::CompBoundedAsym,
        FormulaId::DelannoyPowers,
        FormulaId::DelannoyTrinomial,
        FormulaId::DelannoyAsym,
        FormulaId::Star,
        FormulaId::StarStar,
        FormulaId::WhitneyExact,
        FormulaId::WhitneyAsym,
        FormulaId::HalfopenExact,
        FormulaId::HalfopenAsym,
        FormulaId::Box13Exact,
        FormulaId::Slowinski,
        FormulaId::DyadicSum,
        FormulaId::GriggsAsym,
        FormulaId::Andrews,
        FormulaId::DuchiDiag,
        FormulaId::Box12Exact,
        FormulaId::Box12Asym,
        FormulaId::UnitCube3Growth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::CompAll => "comp_all",
            FormulaId::Comp12 => "comp_12",
            FormulaId::CompGe2 => "comp_ge2",
            FormulaId::CompOdd => "comp_odd",
            FormulaId::CompBoundedAsym => "comp_boundedM_asym",
            FormulaId::DelannoyPowers => "delannoy_powers",
            FormulaId::DelannoyTrinomial => "delannoy_trinomial",
            FormulaId::DelannoyAsym => "delannoy_asym",
            FormulaId::Star => "star",
            FormulaId::StarStar => "starstar",
            FormulaId::WhitneyExact => "whitney_exact",
            FormulaId::WhitneyAsym => "whitney_asym",
            FormulaId::HalfopenExact => "halfopen_exact",
            FormulaId::HalfopenAsym => "halfopen_asym",
            FormulaId::Box13Exact => "box13_exact",
            FormulaId::Slowinski => "slowinski",
            FormulaId::DyadicSum => "dyadic_sum",
            FormulaId::GriggsAsym => "griggs_asym",
            FormulaId::Andrews => "andrews",
            FormulaId::DuchiDiag => "duchi_diag",
            FormulaId::Box12Exact => "box12_exact",
            FormulaId::Box12Asym => "box12_asym",
            FormulaId::UnitCube3Growth => "unitcube3_growth",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownFormula(s.to_string()))
    }
}

/// How many sequences a formula handles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimSpec {
    /// Fixed dimension.
    Fixed(usize),
    /// Any dimension `N >= 1`.
    Any,
    /// No length inputs at all.
    None,
}

/// Catalog metadata for one formula.
#[derive(Debug, Clone)]
pub struct FormulaInfo {
    pub id: FormulaId,
    /// Exact formulas return integers; the rest return floating
    /// approximations.
    pub exact: bool,
    /// Defined only for equal lengths `(l, ..., l)`.
    pub diagonal_only: bool,
    pub dimensions: DimSpec,
    /// Human-readable description of the step set the formula counts.
    pub case: &'static str,
}

/// The full formula catalog, in a fixed order.
pub fn catalog() -> &'static [FormulaInfo] {
    use DimSpec::{Any, Fixed};
    static CATALOG: std::sync::OnceLock<Vec<FormulaInfo>> = std::sync::OnceLock::new();
    CATALOG.get_or_init(|| {
        vec![
            info(FormulaId::CompAll, true, false, Fixed(1), "compositions, parts in {1,2,3,...}"),
            info(FormulaId::Comp12, true, false, Fixed(1), "compositions, parts in {1,2}"),
            info(FormulaId::CompGe2, true, false, Fixed(1), "compositions, parts in {2,3,4,...}"),
            info(FormulaId::CompOdd, true, false, Fixed(1), "compositions, odd parts"),
            info(
                FormulaId::CompBoundedAsym,
                false,
                false,
                Fixed(1),
                "compositions, parts in {1,...,M} (asymptotic)",
            ),
            info(FormulaId::DelannoyPowers, true, false, Fixed(2), "S = {(1,0),(0,1),(1,1)}"),
            info(FormulaId::DelannoyTrinomial, true, false, Fixed(2), "S = {(1,0),(0,1),(1,1)}"),
            info(
                FormulaId::DelannoyAsym,
                false,
                false,
                Fixed(2),
                "S = {(1,0),(0,1),(1,1)} (asymptotic)",
            ),
            info(FormulaId::Star, true, false, Fixed(2), "S = {(1,1),(1,2),(2,1)}"),
            info(FormulaId::StarStar, true, false, Fixed(2), "S = {(1,1),(1,2),(2,1)}"),
            info(FormulaId::WhitneyExact, true, false, Fixed(2), "S = {1,2} x {1,2}"),
            info(
                FormulaId::WhitneyAsym,
                false,
                true,
                Fixed(2),
                "S = {1,2} x {1,2}, diagonal (asymptotic)",
            ),
            info(FormulaId::HalfopenExact, true, false, Fixed(2), "S = {(x,y) | x >= 1, y >= 0}"),
            info(
                FormulaId::HalfopenAsym,
                false,
                true,
                Fixed(2),
                "S = {(x,y) | x >= 1, y >= 0}, diagonal (asymptotic)",
            ),
            info(FormulaId::Box13Exact, true, false, Fixed(2), "S = {1,2,3} x {1,2,3}"),
            info(FormulaId::Slowinski, true, false, Any, "classical columns {0,1}^N - {0}"),
            info(FormulaId::DyadicSum, true, false, Any, "classical columns {0,1}^N - {0}"),
            info(
                FormulaId::GriggsAsym,
                false,
                true,
                Any,
                "classical columns, diagonal (asymptotic)",
            ),
            info(FormulaId::Andrews, true, false, Any, "all non-zero steps of naturals"),
            info(
                FormulaId::DuchiDiag,
                true,
                true,
                Any,
                "all non-zero steps of naturals, diagonal",
            ),
            info(FormulaId::Box12Exact, true, false, Any, "S = {1,2}^N"),
            info(FormulaId::Box12Asym, false, true, Any, "S = {1,2}^N, diagonal (asymptotic)"),
            info(
                FormulaId::UnitCube3Growth,
                false,
                true,
                DimSpec::None,
                "growth rate of the classical diagonal, N = 3",
            ),
        ]
    })
}

fn info(
    id: FormulaId,
    exact: bool,
    diagonal_only: bool,
    dimensions: DimSpec,
    case: &'static str,
) -> FormulaInfo {
    FormulaInfo { id, exact, diagonal_only, dimensions, case }
}

/// Catalog entry for one id.
pub fn formula_info(id: FormulaId) -> &'static FormulaInfo {
    catalog().iter().find(|i| i.id == id).expect("catalog covers every id")
}

/// The step set a formula counts, for cross-checking against the table.
/// `max_len` bounds the part sizes kept for families with unbounded parts
/// (only steps inside the query box matter). Returns `None` for formulas
/// without a single underlying step set.
pub fn step_set_for(id: FormulaId, dimension: usize, max_len: u32) -> Option<StepSet> {
    match id {
        FormulaId::CompAll => Some(StepSet::AllPositiveWeak { dimension: 1 }),
        FormulaId::Comp12 => Some(StepSet::Product { bases: vec![BaseSet::finite(vec![1, 2])] }),
        FormulaId::CompGe2 => {
            Some(StepSet::Product { bases: vec![BaseSet::finite((2..=max_len.max(2)).collect())] })
        }
        FormulaId::CompOdd => Some(StepSet::Product {
            bases: vec![BaseSet::finite((1..=max_len.max(1)).step_by(2).collect())],
        }),
        FormulaId::DelannoyPowers | FormulaId::DelannoyTrinomial | FormulaId::DelannoyAsym => {
            Some(StepSet::UnitCube { dimension: 2 })
        }
        FormulaId::Star | FormulaId::StarStar => {
            let steps = [[1u32, 1], [1, 2], [2, 1]]
                .iter()
                .map(|e| crate::step::StepVector::new(e.to_vec()).unwrap())
                .collect();
            Some(StepSet::explicit(steps).unwrap())
        }
        FormulaId::WhitneyExact | FormulaId::WhitneyAsym => {
            Some(StepSet::Box { low: 1, high: 2, dimension: 2 })
        }
        FormulaId::HalfopenExact | FormulaId::HalfopenAsym => Some(StepSet::HalfOpen),
        FormulaId::Box13Exact => Some(StepSet::Box { low: 1, high: 3, dimension: 2 }),
        FormulaId::Slowinski | FormulaId::DyadicSum | FormulaId::GriggsAsym => {
            Some(StepSet::UnitCube { dimension })
        }
        FormulaId::Andrews | FormulaId::DuchiDiag => Some(StepSet::AllPositiveWeak { dimension }),
        FormulaId::Box12Exact | FormulaId::Box12Asym => {
            Some(StepSet::Box { low: 1, high: 2, dimension })
        }
        FormulaId::CompBoundedAsym | FormulaId::UnitCube3Growth => None,
    }
}

/// Evaluates an exact formula at the given lengths. Dimension and
/// diagonal-only constraints are enforced.
pub fn eval_exact(id: FormulaId, lengths: &LengthTuple) -> Result<BigUint> {
    let info = formula_info(id);
    if !info.exact {
        return Err(Error::UnknownFormula(format!("{} is not an exact formula", id)));
    }
    check_dimensions(info, lengths)?;
    let l = lengths.lengths();
    match id {
        FormulaId::CompAll | FormulaId::Comp12 | FormulaId::CompGe2 | FormulaId::CompOdd => {
            comp_closed(id, l[0] as u64)
        }
        FormulaId::DelannoyPowers => {
            Ok(delannoy_exact(l[0] as u64, l[1] as u64, DelannoyVariant::Powers))
        }
        FormulaId::DelannoyTrinomial => {
            Ok(delannoy_exact(l[0] as u64, l[1] as u64, DelannoyVariant::Trinomial))
        }
        FormulaId::Star => Ok(star(l[0] as u64, l[1] as u64)),
        FormulaId::StarStar => Ok(starstar(l[0] as u64, l[1] as u64)),
        FormulaId::WhitneyExact => Ok(whitney_exact(l[0] as u64, l[1] as u64)),
        FormulaId::HalfopenExact => Ok(halfopen_exact(l[0] as u64, l[1] as u64)),
        FormulaId::Box13Exact => Ok(box13_exact(l[0] as u64, l[1] as u64)),
        FormulaId::Slowinski => Ok(slowinski(lengths)),
        FormulaId::DyadicSum => Ok(dyadic_sum(lengths)),
        FormulaId::Andrews => Ok(andrews(lengths)),
        FormulaId::DuchiDiag => duchi_diag(l[0] as u64, lengths.dimension()),
        FormulaId::Box12Exact => Ok(box12_exact(lengths)),
        _ => unreachable!("exact ids are handled above"),
    }
}

/// Evaluates an approximate formula. Diagonal formulas take their `l` (and
/// dimension) from the tuple; `m` is the part bound for the bounded
/// composition asymptotic.
pub fn eval_approx(
    id: FormulaId,
    lengths: Option<&LengthTuple>,
    m: Option<u32>,
) -> Result<ApproxValue> {
    let info = formula_info(id);
    if info.exact {
        return Err(Error::UnknownFormula(format!("{} is an exact formula", id)));
    }
    if id == FormulaId::UnitCube3Growth {
        let d = unitcube3_growth();
        return Ok(ApproxValue::new(id, vec![], d));
    }
    let lengths = lengths.ok_or_else(|| Error::DomainError(format!("{} needs lengths", id)))?;
    check_dimensions(info, lengths)?;
    let l = lengths.lengths();
    match id {
        FormulaId::CompBoundedAsym => {
            let m = m.ok_or_else(|| Error::DomainError("comp_boundedM_asym needs M".into()))?;
            comp_bounded_asym(l[0] as u64, m)
        }
        FormulaId::DelannoyAsym => delannoy_asym(l[0] as u64, l[1] as u64),
        FormulaId::WhitneyAsym => whitney_asym(l[0] as u64),
        FormulaId::HalfopenAsym => halfopen_asym(l[0] as u64),
        FormulaId::GriggsAsym => griggs_asym(l[0] as u64, lengths.dimension() as u32),
        FormulaId::Box12Asym => box12_asym(l[0] as u64, lengths.dimension() as u32),
        _ => unreachable!("approximate ids are handled above"),
    }
}

fn check_dimensions(info: &FormulaInfo, lengths: &LengthTuple) -> Result<()> {
    match info.dimensions {
        DimSpec::Fixed(n) if lengths.dimension() != n => {
            return Err(Error::DimensionMismatch { expected: n, found: lengths.dimension() });
        }
        DimSpec::Any if lengths.dimension() == 0 => {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        _ => {}
    }
    if info.diagonal_only {
        let l = lengths.lengths();
        if l.iter().any(|&v| v != l[0]) {
            return Err(Error::DomainError(format!(
                "{} is defined on the diagonal only, got {}",
                info.id, lengths
            )));
        }
    }
    Ok(())
}

/// A floating approximation with its formula and inputs attached. `log10`
/// stays meaningful even when the value itself overflows `f64`.
#[derive(Debug, Clone)]
pub struct ApproxValue {
    pub id: FormulaId,
    pub inputs: Vec<u64>,
    pub value: f64,
    pub log10: f64,
}

impl ApproxValue {
    pub(crate) fn new(id: FormulaId, inputs: Vec<u64>, value: f64) -> Self {
        ApproxValue { id, inputs, value, log10: value.log10() }
    }

    pub(crate) fn from_log10(id: FormulaId, inputs: Vec<u64>, log10: f64) -> Self {
        ApproxValue { id, inputs, value: 10f64.powf(log10), log10 }
    }

    /// Splits the value into a mantissa in `[1, 10)` and a decimal exponent.
    pub fn mantissa_exponent(&self) -> (f64, i64) {
        let exponent = self.log10.floor();
        (10f64.powf(self.log10 - exponent), exponent as i64)
    }
}

impl fmt::Display for ApproxValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_finite() {
            write!(f, "{}", self.value)
        } else {
            let (m, e) = self.mantissa_exponent();
            write!(f, "{:.6}e{}", m, e)
        }
    }
}
