//! The tensor representation of virtual braids and its trace invariants.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::model::RMatrixModel;
use super::poly::LaurentPoly;
use crate::braid::random::{random_word, seeded_rng};
use crate::braid::{BraidCategory, BraidWord, GenKind, Generator};
use crate::error::{Error, Result};

pub const DEFAULT_DIMENSION_BUDGET: usize = 4096;

fn dimension(d: usize, n: usize, budget: usize) -> Result<usize> {
    let dim = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(d));
    match dim {
        Some(dim) if dim <= budget => Ok(dim),
        _ => Err(Error::DimensionBudgetExceeded {
            dim: dim.unwrap_or(usize::MAX),
            budget,
        }),
    }
}

fn check_category(w: &BraidWord, model: &RMatrixModel) -> Result<()> {
    match w.category() {
        BraidCategory::Virtual => Ok(()),
        BraidCategory::Flat => Err(Error::CategoryModelMismatch(BraidCategory::Flat)),
        c => {
            if model.check().certifies(c) {
                Ok(())
            } else {
                Err(Error::CategoryModelMismatch(c))
            }
        }
    }
}

/// `ρ(w)`, the product over letters of `I ⊗ … ⊗ M ⊗ … ⊗ I` with `M` one of
/// `R`, `R⁻¹`, `V`.
pub fn rho_with_budget(w: &BraidWord, model: &RMatrixModel, budget: usize) -> Result<Matrix> {
    check_category(w, model)?;
    let n = w.strands();
    let dim = dimension(model.d, n, budget)?;
    let mut m = Matrix::identity(dim);
    for g in w.letters() {
        let op = match g.kind {
            GenKind::SigmaPos => &model.r,
            GenKind::SigmaNeg => &model.rinv,
            GenKind::V => &model.v,
            GenKind::C => return Err(Error::CategoryModelMismatch(BraidCategory::Flat)),
        };
        m = m.mul_local(op, model.d, n - g.index - 1);
    }
    Ok(m)
}

pub fn rho(w: &BraidWord, model: &RMatrixModel) -> Result<Matrix> {
    rho_with_budget(w, model, DEFAULT_DIMENSION_BUDGET)
}

/// `trace(η^{⊗n} M)` for an `dⁿ × dⁿ` matrix `M`.
pub fn eta_trace(m: &Matrix, model: &RMatrixModel, n: usize) -> LaurentPoly {
    let d = model.d;
    let digits = |mut x: usize| -> Vec<usize> {
        let mut out = vec![0; n];
        for k in (0..n).rev() {
            out[k] = x % d;
            x /= d;
        }
        out
    };
    let mut total = LaurentPoly::zero();
    if model.eta.is_diagonal() {
        for r in 0..m.dim() {
            let x = m.get(r, r);
            if x.is_zero() {
                continue;
            }
            let mut w = LaurentPoly::one();
            for k in digits(r) {
                w = &w * model.eta.get(k, k);
            }
            total += &(&w * x);
        }
    } else {
        for r in 0..m.dim() {
            let dr = digits(r);
            for c in 0..m.dim() {
                let x = m.get(c, r);
                if x.is_zero() {
                    continue;
                }
                let mut w = LaurentPoly::one();
                for (a, b) in dr.iter().zip(digits(c)) {
                    w = &w * model.eta.get(*a, b);
                }
                total += &(&w * x);
            }
        }
    }
    total
}

/// `tr(w) = trace(η^{⊗n} ρ(w))`.
pub fn trace(w: &BraidWord, model: &RMatrixModel) -> Result<LaurentPoly> {
    trace_with_budget(w, model, DEFAULT_DIMENSION_BUDGET)
}

pub fn trace_with_budget(w: &BraidWord, model: &RMatrixModel, budget: usize) -> Result<LaurentPoly> {
    let m = rho_with_budget(w, model, budget)?;
    Ok(eta_trace(&m, model, w.strands()))
}

/// `Invar(w) = α^(−writhe) · tr(w)`.
pub fn trace_invariant(w: &BraidWord, model: &RMatrixModel) -> Result<LaurentPoly> {
    trace_invariant_with_budget(w, model, DEFAULT_DIMENSION_BUDGET)
}

pub fn trace_invariant_with_budget(
    w: &BraidWord,
    model: &RMatrixModel,
    budget: usize,
) -> Result<LaurentPoly> {
    let t = trace_with_budget(w, model, budget)?;
    let factor = model
        .alpha
        .pow(-w.writhe())
        .ok_or_else(|| Error::InvalidModel("alpha is not invertible".into()))?;
    Ok(&factor * &t)
}

/// A quotient of Laurent polynomials, kept unreduced unless it divides exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl Quotient {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        match num.div_exact(&den) {
            Some(q) => Quotient {
                num: q,
                den: LaurentPoly::one(),
            },
            None => Quotient { num, den },
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Exact equality of `a/b` and `c/d` by cross multiplication.
    pub fn same_value(&self, other: &Quotient) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// `Invar(w)` divided by the value on the one-strand unknot.
pub fn normalized_invariant(w: &BraidWord, model: &RMatrixModel) -> Result<Quotient> {
    let inv = trace_invariant(w, model)?;
    let unknot = model.eta.trace();
    if unknot.is_zero() {
        return Err(Error::InvalidModel("trace of eta vanishes".into()));
    }
    Ok(Quotient::new(inv, unknot))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleStatus {
    Holds,
    Fails,
    /// No sample had a nonzero denominator to fit the constant.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleResult {
    pub rule: u8,
    pub statement: String,
    pub status: RuleStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<String>,
    pub samples: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceReport {
    pub model: String,
    /// `D = trace(η)`; the rules use the trace scaled by `D^(−n)`.
    pub normalization: String,
    pub rules: Vec<RuleResult>,
    pub profile: String,
}

impl TraceReport {
    pub fn rule(&self, k: u8) -> &RuleResult {
        &self.rules[(k - 1) as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomConfig {
    pub max_strands: usize,
    pub max_len: usize,
    /// Enumerate all words up to `max_len`; otherwise draw `random_words` per strand count.
    pub exhaustive: bool,
    pub random_words: usize,
    pub cyclicity_pairs: usize,
    pub seed: u64,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        AxiomConfig {
            max_strands: 3,
            max_len: 4,
            exhaustive: true,
            random_words: 100,
            cyclicity_pairs: 200,
            seed: crate::braid::random::DEFAULT_SEED,
        }
    }
}

/// All words over `s`, `S`, `v` on `n` strands with at most `max_len` letters.
pub fn all_words(n: usize, max_len: usize) -> Vec<BraidWord> {
    let mut alphabet = Vec::new();
    for i in 1..n {
        alphabet.extend([Generator::s(i), Generator::s_inv(i), Generator::v(i)]);
    }
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        if alphabet.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for w in &layer {
            for &g in &alphabet {
                let mut x: Vec<Generator> = w.clone();
                x.push(g);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.into_iter()
        .map(|ls| BraidWord::new(n, ls, BraidCategory::Virtual).expect("valid letters"))
        .collect()
}

fn extension(rule: u8, n: usize) -> Option<Vec<Generator>> {
    use Generator as G;
    match rule {
        3 => Some(vec![G::s(n)]),
        4 => Some(vec![G::v(n)]),
        5 if n >= 2 => Some(vec![G::s_inv(n), G::v(n - 1), G::s(n)]),
        6 if n >= 2 => Some(vec![
            G::v(n),
            G::v(n - 1),
            G::s(n - 1),
            G::v(n),
            G::s_inv(n - 1),
            G::v(n - 1),
            G::v(n),
        ]),
        _ => None,
    }
}

const STATEMENTS: [&str; 6] = [
    "tr(ab) = tr(ba)",
    "tr(1) = 1 on every strand count",
    "tr(a g_n) = z tr(a)",
    "tr(a v_n) = s tr(a)",
    "tr(a g_n^-1 v_(n-1) g_n) = r tr(a)",
    "tr(a v_n v_(n-1) g_(n-1) v_n g_(n-1)^-1 v_(n-1) v_n) = k tr(a)",
];

/// Test the six virtual Markov trace rules against a model, with the trace
/// normalized so that `tr(1) = 1`.
pub fn markov_axiom_report(model: &RMatrixModel, cfg: &AxiomConfig) -> Result<TraceReport> {
    let mut rng = seeded_rng(cfg.seed);
    let d = model.eta.trace();
    let mut samples: Vec<BraidWord> = Vec::new();
    for n in 1..=cfg.max_strands {
        if cfg.exhaustive {
            samples.extend(all_words(n, cfg.max_len));
        } else {
            for _ in 0..cfg.random_words {
                let len = rng.gen_range(0..=cfg.max_len);
                samples.push(random_word(&mut rng, n, len, BraidCategory::Virtual));
            }
        }
    }
    let mut rules = Vec::new();

    // rule 1
    let mut counter = None;
    for _ in 0..cfg.cyclicity_pairs {
        let n = rng.gen_range(1..=cfg.max_strands.max(1));
        let (la, lb) = (rng.gen_range(0..=cfg.max_len), rng.gen_range(0..=cfg.max_len));
        let a = random_word(&mut rng, n, la, BraidCategory::Virtual);
        let b = random_word(&mut rng, n, lb, BraidCategory::Virtual);
        if trace(&a.compose(&b)?, model)? != trace(&b.compose(&a)?, model)? {
            counter = Some(format!("a = {a}, b = {b}"));
            break;
        }
    }
    rules.push(RuleResult {
        rule: 1,
        statement: STATEMENTS[0].into(),
        status: if counter.is_some() { RuleStatus::Fails } else { RuleStatus::Holds },
        constant: None,
        samples: cfg.cyclicity_pairs,
        counterexample: counter,
    });

    // rule 2
    let mut counter = None;
    if d.is_zero() {
        counter = Some("trace(eta) = 0, no normalization exists".to_string());
    } else {
        for n in 1..=cfg.max_strands + 1 {
            let t = trace(&BraidWord::identity(n, BraidCategory::Virtual), model)?;
            if t != d.pow(n as i64).expect("nonnegative power") {
                counter = Some(format!("n = {n}: trace = {t}"));
                break;
            }
        }
    }
    rules.push(RuleResult {
        rule: 2,
        statement: STATEMENTS[1].into(),
        status: if counter.is_some() { RuleStatus::Fails } else { RuleStatus::Holds },
        constant: None,
        samples: cfg.max_strands + 1,
        counterexample: counter,
    });

    // rules 3-6: tr_{n+1}(aX) / (D tr_n(a)) must be one constant
    for rule in 3u8..=6 {
        let mut fit: Option<Quotient> = None;
        let mut counter = None;
        let mut used = 0;
        for a in &samples {
            let Some(x) = extension(rule, a.strands()) else { continue };
            let ext = a.include_right().append(&x)?;
            let lhs = trace(&ext, model)?;
            let base = &d * &trace(a, model)?;
            used += 1;
            match &fit {
                None => {
                    if !base.is_zero() {
                        fit = Some(Quotient::new(lhs, base));
                    } else if !lhs.is_zero() {
                        counter = Some(format!("a = {a}: tr(a) = 0 but extended trace = {lhs}"));
                        break;
                    }
                }
                Some(c) => {
                    if &lhs * &c.den != &c.num * &base {
                        counter = Some(format!("a = {a}: ratio differs from {c}"));
                        break;
                    }
                }
            }
        }
        let status = match (&counter, &fit) {
            (Some(_), _) => RuleStatus::Fails,
            (None, Some(_)) => RuleStatus::Holds,
            (None, None) => RuleStatus::Undetermined,
        };
        rules.push(RuleResult {
            rule,
            statement: STATEMENTS[rule as usize - 1].into(),
            status,
            constant: fit.filter(|_| counter.is_none()).map(|c| c.to_string()),
            samples: used,
            counterexample: counter,
        });
    }

    let holds = |k: usize| rules[k - 1].status == RuleStatus::Holds;
    let profile = if (1..=6).all(holds) {
        "virtual Markov trace".to_string()
    } else if holds(1) && holds(2) && holds(3) && !holds(4) {
        "virtual rotational invariant".to_string()
    } else {
        let failing: Vec<String> = (1..=6)
            .filter(|&k| !holds(k))
            .map(|k| k.to_string())
            .collect();
        format!("rules {} not satisfied", failing.join(", "))
    };
    Ok(TraceReport {
        model: model.name.clone(),
        normalization: d.to_string(),
        rules,
        profile,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    fn w(t: &str) -> BraidWord {
        parse_word(t).unwrap()
    }

    #[test]
    fn identity_model_values() {
        let m = RMatrixModel::identity(2);
        assert_eq!(trace_invariant(&w("n=3 s1 v2 S1 s2"), &m).unwrap(), LaurentPoly::constant(8));
        assert_eq!(rho(&w("n=3"), &m).unwrap(), Matrix::identity(8));
    }

    #[test]
    fn swap_model_counts_cycles() {
        let m = RMatrixModel::swap(2);
        let x = w("n=4 s1 v3");
        assert_eq!(trace_invariant(&x, &m).unwrap(), LaurentPoly::constant(4));
    }

    #[test]
    fn bracket_kink() {
        let m = RMatrixModel::bracket();
        let a = normalized_invariant(&w("n=2 s1"), &m).unwrap();
        let b = normalized_invariant(&w("n=1"), &m).unwrap();
        assert_eq!(a, b);
        assert!(a.num.is_one());
    }

    #[test]
    fn involution_and_budget() {
        let m = RMatrixModel::bracket();
        assert_eq!(rho(&w("n=3 v1 v1"), &m).unwrap(), Matrix::identity(8));
        assert!(matches!(
            rho_with_budget(&w("n=5"), &m, 16),
            Err(Error::DimensionBudgetExceeded { dim: 32, budget: 16 })
        ));
        assert!(matches!(
            rho(&w("n=3 v1 s2 s1 cat=welded"), &m),
            Err(Error::CategoryModelMismatch(BraidCategory::Welded))
        ));
        assert!(rho(&w("n=3 v1 s2 s1 cat=welded"), &RMatrixModel::swap(2)).is_ok());
    }

    #[test]
    fn identity_model_satisfies_all_rules() {
        let cfg = AxiomConfig {
            max_len: 3,
            cyclicity_pairs: 20,
            ..AxiomConfig::default()
        };
        let r = markov_axiom_report(&RMatrixModel::identity(2), &cfg).unwrap();
        for rule in &r.rules {
            assert_eq!(rule.status, RuleStatus::Holds, "{rule:?}");
        }
        for k in 3..=6 {
            assert_eq!(r.rule(k).constant.as_deref(), Some("1"));
        }
    }
}
