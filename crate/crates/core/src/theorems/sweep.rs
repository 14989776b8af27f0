//! Whole-ring verification: every element of a finite ring, every condition
//! of a theorem, every exponent in range, compared against exhaustive
//! Moore–Penrose search.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::decomposition::{t39_decomposition, Decomposition};
use super::lemmas::lemma_checks;
use super::perturbation::{t38_condition, PerturbedUnit};
use super::{
    formula_witness, is_co_supported, is_well_supported, t31_condition, t31_formula, t32_condition,
    t33_condition, t34_condition, t34_formula, t35_condition, t35_formula, Witness,
};
use crate::backends::{finite_size, Backend};
use crate::element::AnyRing;
use crate::error::{Error, Result};
use crate::ginverse::{is_inner_inverse, moore_penrose, moore_penrose_exhaustive};
use crate::ring::RingDescriptor;
use crate::with_backend;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T31,
    T32,
    T33,
    T34,
    T35,
    C36,
    T38,
    T39,
    C310,
    /// The supporting identities checked by [`lemma_checks`].
    Lemmas,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::T31,
        TheoremId::T32,
        TheoremId::T33,
        TheoremId::T34,
        TheoremId::T35,
        TheoremId::C36,
        TheoremId::T38,
        TheoremId::T39,
        TheoremId::C310,
        TheoremId::Lemmas,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T31 => "T3.1",
            TheoremId::T32 => "T3.2",
            TheoremId::T33 => "T3.3",
            TheoremId::T34 => "T3.4",
            TheoremId::T35 => "T3.5",
            TheoremId::C36 => "C3.6",
            TheoremId::T38 => "T3.8",
            TheoremId::T39 => "T3.9",
            TheoremId::C310 => "C3.10",
            TheoremId::Lemmas => "lemmas",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub n_max: u32,
    pub m_max: u32,
    /// Worker threads; `None` uses one per core.
    pub workers: Option<usize>,
    /// Also compare the witness-based `a†` against exhaustive search.
    pub oracle_crosscheck: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            n_max: 3,
            m_max: 3,
            workers: None,
            oracle_crosscheck: false,
        }
    }
}

/// One evaluated condition on one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub condition: String,
    pub n: u32,
    pub m: u32,
    pub expected: bool,
    pub actual: bool,
    pub details: Option<String>,
}

impl CheckOutcome {
    pub fn equivalence(
        condition: impl Into<String>,
        n: u32,
        m: u32,
        expected: bool,
        actual: bool,
    ) -> Self {
        CheckOutcome {
            condition: condition.into(),
            n,
            m,
            expected,
            actual,
            details: None,
        }
    }

    /// A statement expected to be true; `details` is rendered only on failure.
    pub fn holds(
        condition: impl Into<String>,
        n: u32,
        m: u32,
        ok: bool,
        details: impl FnOnce() -> String,
    ) -> Self {
        CheckOutcome {
            condition: condition.into(),
            n,
            m,
            expected: true,
            actual: ok,
            details: (!ok).then(details),
        }
    }

    /// A formula output compared with the oracle `a†`.
    pub fn formula<E: PartialEq + fmt::Debug>(
        condition: impl Into<String>,
        n: u32,
        m: u32,
        got: &E,
        oracle: &E,
    ) -> Self {
        CheckOutcome::holds(condition, n, m, got == oracle, || {
            format!("formula gave {got:?}, exhaustive a† = {oracle:?}")
        })
    }

    fn formula_result<E: PartialEq + fmt::Debug>(
        condition: String,
        n: u32,
        m: u32,
        got: Result<E>,
        oracle: &E,
    ) -> Result<Self> {
        match got {
            Ok(b) => Ok(CheckOutcome::formula(condition, n, m, &b, oracle)),
            Err(
                e @ (Error::Verification(_) | Error::WitnessMismatch(_) | Error::Precondition(_)),
            ) => Ok(CheckOutcome::holds(condition, n, m, false, || {
                e.to_string()
            })),
            Err(e) => Err(e),
        }
    }

    pub fn agrees(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentRanges {
    pub n: [u32; 2],
    pub m: [u32; 2],
}

/// Per-condition tallies over the whole sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionSummary {
    pub condition: String,
    pub evaluations: usize,
    pub held: usize,
    pub agreed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub element: Value,
    pub index: usize,
    pub condition: String,
    pub n: u32,
    pub m: u32,
    pub expected: bool,
    pub actual: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ring: RingDescriptor,
    pub theorem_id: String,
    pub params: ExponentRanges,
    pub elements_scanned: usize,
    pub mp_invertible: usize,
    pub agreement: Vec<ConditionSummary>,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn evaluations(&self) -> usize {
        self.agreement.iter().map(|s| s.evaluations).sum()
    }

    /// The report with timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        VerificationReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} on {}: n in {}..={}, m in {}..={}",
            self.theorem_id,
            self.ring,
            self.params.n[0],
            self.params.n[1],
            self.params.m[0],
            self.params.m[1]
        )?;
        writeln!(
            f,
            "{} elements scanned, {} Moore-Penrose invertible, {} ms",
            self.elements_scanned, self.mp_invertible, self.elapsed_ms
        )?;
        let width = self
            .agreement
            .iter()
            .map(|s| s.condition.len())
            .max()
            .unwrap_or(9)
            .max(9);
        writeln!(
            f,
            "{:<width$}  {:>6}  {:>6}  {:>6}",
            "condition", "evals", "held", "agreed"
        )?;
        for s in &self.agreement {
            writeln!(
                f,
                "{:<width$}  {:>6}  {:>6}  {:>6}",
                s.condition, s.evaluations, s.held, s.agreed
            )?;
        }
        if self.counterexamples.is_empty() {
            write!(f, "0 counterexamples")
        } else {
            writeln!(f, "{} counterexamples:", self.counterexamples.len())?;
            for c in &self.counterexamples {
                write!(
                    f,
                    "  a = {} [{}] n={} m={}: expected {}, got {}",
                    c.element, c.condition, c.n, c.m, c.expected, c.actual
                )?;
                if let Some(d) = &c.details {
                    write!(f, " ({d})")?;
                }
                writeln!(f)?;
            }
            Ok(())
        }
    }
}

/// Sweeps a runtime-selected ring.
pub fn verify_theorem(
    ring: &AnyRing,
    theorem_id: &str,
    options: &SweepOptions,
) -> Result<VerificationReport> {
    let theorem: TheoremId = theorem_id.parse()?;
    with_backend!(ring, r => verify_backend(r, theorem, options))
}

pub fn verify_backend<B: Backend>(
    r: &B,
    theorem: TheoremId,
    options: &SweepOptions,
) -> Result<VerificationReport> {
    if options.n_max == 0 || options.m_max == 0 {
        return Err(Error::InvalidArgument("exponent ranges start at 1".into()));
    }
    let size = finite_size(r, "theorem sweep")?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    let per_element: Vec<(bool, Vec<CheckOutcome>)> = pool.install(|| {
        (0..size)
            .into_par_iter()
            .map(|i| {
                let a = r.element_at(i);
                let dagger = moore_penrose_exhaustive(r, &a)?;
                let mut out = evaluate(r, &a, dagger.as_ref(), theorem, options)?;
                if options.oracle_crosscheck {
                    let library = moore_penrose(r, &a)?.value;
                    out.push(CheckOutcome::holds(
                        "library a† vs exhaustive",
                        1,
                        1,
                        library == dagger,
                        || format!("library gave {library:?}, exhaustive gave {dagger:?}"),
                    ));
                }
                Ok((dagger.is_some(), out))
            })
            .collect::<Result<_>>()
    })?;

    let mut agreement: Vec<ConditionSummary> = Vec::new();
    let mut counterexamples = Vec::new();
    for (index, (_, outcomes)) in per_element.iter().enumerate() {
        for o in outcomes {
            let pos = match agreement.iter().position(|s| s.condition == o.condition) {
                Some(p) => p,
                None => {
                    agreement.push(ConditionSummary {
                        condition: o.condition.clone(),
                        evaluations: 0,
                        held: 0,
                        agreed: 0,
                    });
                    agreement.len() - 1
                }
            };
            let s = &mut agreement[pos];
            s.evaluations += 1;
            s.held += usize::from(o.actual);
            s.agreed += usize::from(o.agrees());
            if !o.agrees() {
                counterexamples.push(Counterexample {
                    element: r.to_json(&r.element_at(index)),
                    index,
                    condition: o.condition.clone(),
                    n: o.n,
                    m: o.m,
                    expected: o.expected,
                    actual: o.actual,
                    details: o.details.clone(),
                });
            }
        }
    }
    Ok(VerificationReport {
        ring: r.descriptor(),
        theorem_id: theorem.to_string(),
        params: ExponentRanges {
            n: [1, options.n_max],
            m: [1, options.m_max],
        },
        elements_scanned: size,
        mp_invertible: per_element.iter().filter(|(e, _)| *e).count(),
        agreement,
        counterexamples,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn witness_condition<E: fmt::Debug>(w: &Option<Witness<E>>) -> bool {
    w.is_some()
}

/// Every check of `theorem` on one element.
pub fn evaluate<B: Backend>(
    r: &B,
    a: &B::Elem,
    dagger: Option<&B::Elem>,
    theorem: TheoremId,
    options: &SweepOptions,
) -> Result<Vec<CheckOutcome>> {
    let exists = dagger.is_some();
    let ns = 1..=options.n_max;
    let mut out = Vec::new();
    let mut push = |id: String, n: u32, m: u32, actual: bool| {
        out.push(CheckOutcome::equivalence(id, n, m, exists, actual));
    };
    match theorem {
        TheoremId::T31 => {
            for n in ns {
                for m in 1..=options.m_max {
                    for k in 1..=13 {
                        let held = witness_condition(&t31_condition(r, a, k, n, m)?);
                        push(format!("T3.1({k})"), n, m, held);
                    }
                }
            }
            if let Some(d) = dagger {
                for n in 1..=options.n_max {
                    for m in 1..=options.m_max {
                        for k in 2..=13 {
                            let id = format!("T3.1({k}) formula");
                            let got = match formula_witness(r, a, k, n, m)? {
                                Some(w) => t31_formula(r, a, &w),
                                None => Err(Error::WitnessMismatch("no witness".into())),
                            };
                            out.push(CheckOutcome::formula_result(id, n, m, got, d)?);
                        }
                    }
                }
            }
        }
        TheoremId::T32 | TheoremId::T33 => {
            for n in ns {
                for k in 1..=5 {
                    let w = if theorem == TheoremId::T32 {
                        t32_condition(r, a, k, n)?
                    } else {
                        t33_condition(r, a, k, n)?
                    };
                    push(format!("{theorem}({k})"), n, 1, w.is_some());
                }
            }
        }
        TheoremId::T34 | TheoremId::T35 => {
            let mut formulas = Vec::new();
            for n in ns {
                for k in 1..=7 {
                    let w = if theorem == TheoremId::T34 {
                        t34_condition(r, a, k, n)?
                    } else {
                        t35_condition(r, a, k, n)?
                    };
                    push(format!("{theorem}({k})"), n, 1, w.is_some());
                    if let (Some(w), Some(d), true) = (w, dagger, k >= 2) {
                        let got = if theorem == TheoremId::T34 {
                            t34_formula(r, a, &w)
                        } else {
                            t35_formula(r, a, &w)
                        };
                        formulas.push(CheckOutcome::formula_result(
                            format!("{theorem}({k}) formula"),
                            n,
                            1,
                            got,
                            d,
                        )?);
                    }
                }
            }
            out.extend(formulas);
        }
        TheoremId::C36 => {
            push("C3.6(1)".into(), 1, 1, moore_penrose(r, a)?.exists());
            push("C3.6(2)".into(), 1, 1, is_well_supported(r, a)?.is_some());
            push("C3.6(3)".into(), 1, 1, is_co_supported(r, a)?.is_some());
        }
        TheoremId::T38 => {
            let size = finite_size(r, "inner inverse scan")?;
            for i in 0..size {
                let g = r.element_at(i);
                if !is_inner_inverse(r, a, &g) {
                    continue;
                }
                for n in ns.clone() {
                    for variant in PerturbedUnit::ALL {
                        let held = t38_condition(r, a, &g, n, variant)?;
                        let mut o = CheckOutcome::equivalence(
                            format!("T3.8({})", variant.condition()),
                            n,
                            1,
                            exists,
                            held,
                        );
                        if !o.agrees() {
                            o.details = Some(format!("{}, a⁻ = {g:?}", variant.label()));
                        }
                        out.push(o);
                    }
                }
            }
        }
        TheoremId::T39 | TheoremId::C310 => {
            let ns = if theorem == TheoremId::C310 {
                1..=1
            } else {
                ns
            };
            for n in ns {
                for variant in Decomposition::ALL {
                    let check = t39_decomposition(r, a, n, variant)?;
                    let mut o = CheckOutcome::equivalence(
                        format!("{theorem}({})", variant.condition()),
                        n,
                        1,
                        exists,
                        check.holds,
                    );
                    if !o.agrees() {
                        o.details = Some(format!(
                            "{}: sum is whole {}, intersection trivial {}",
                            variant.label(),
                            check.sum_is_whole,
                            check.intersection_trivial
                        ));
                    }
                    out.push(o);
                }
            }
        }
        TheoremId::Lemmas => out.extend(lemma_checks(r, a, dagger, options.n_max, options.m_max)?),
    }
    Ok(out)
}
