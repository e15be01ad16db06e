//! The one-object quantaloid `([−∞,∞], +, 0)` ordered by `≥`, with exact rationals.
//!
//! In this order the join is the real minimum, the meet the real maximum, the
//! bottom `+∞` and the top `−∞`. Composition absorbs at the bottom:
//! `x + (+∞) = +∞` for every `x`, including `−∞`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    NegInf,
    Finite(BigRational),
    PosInf,
}

use ExtendedRational::{Finite, NegInf, PosInf};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{0}` as an extended rational")]
pub struct ParseExtendedError(pub String);

impl ExtendedRational {
    pub fn int(n: i64) -> Self {
        Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Finite(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn zero() -> Self {
        Finite(BigRational::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    /// Negation as a real number; swaps the infinities.
    pub fn neg(&self) -> Self {
        match self {
            NegInf => PosInf,
            PosInf => NegInf,
            Finite(r) => Finite(-r.clone()),
        }
    }

    /// The usual order on `[−∞,∞]`.
    fn real_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInf => f.write_str("-inf"),
            PosInf => f.write_str("+inf"),
            Finite(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for ExtendedRational {
    type Err = ParseExtendedError;

    /// Accepts `+inf`, `inf`, `-inf`, integers and fractions `n/d`; `−` may stand for `-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().replace('−', "-");
        match t.as_str() {
            "+inf" | "inf" | "+∞" | "∞" => return Ok(PosInf),
            "-inf" | "-∞" => return Ok(NegInf),
            _ => {}
        }
        let t = t.strip_prefix('+').unwrap_or(&t);
        let bad = || ParseExtendedError(s.to_string());
        let r = match t.split_once('/') {
            Some((n, d)) => {
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n.parse().map_err(|_| bad())?, d)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
        };
        Ok(Finite(r))
    }
}

/// `a ⊑ b` iff `a ≥ b` as extended reals.
pub fn r_leq(a: &ExtendedRational, b: &ExtendedRational) -> bool {
    a.real_cmp(b) != Ordering::Less
}

/// Binary join: the real minimum.
pub fn r_join(a: &ExtendedRational, b: &ExtendedRational) -> ExtendedRational {
    if a.real_cmp(b) == Ordering::Greater { b.clone() } else { a.clone() }
}

/// Binary meet: the real maximum.
pub fn r_meet(a: &ExtendedRational, b: &ExtendedRational) -> ExtendedRational {
    if a.real_cmp(b) == Ordering::Less { b.clone() } else { a.clone() }
}

/// Join of a finite family; the empty join is `+∞`.
pub fn r_join_all<'a>(xs: impl IntoIterator<Item = &'a ExtendedRational>) -> ExtendedRational {
    xs.into_iter().fold(PosInf, |acc, x| r_join(&acc, x))
}

/// Meet of a finite family; the empty meet is `−∞`.
pub fn r_meet_all<'a>(xs: impl IntoIterator<Item = &'a ExtendedRational>) -> ExtendedRational {
    xs.into_iter().fold(NegInf, |acc, x| r_meet(&acc, x))
}

/// `a + b`, with `+∞` absorbing.
pub fn r_compose(a: &ExtendedRational, b: &ExtendedRational) -> ExtendedRational {
    match (a, b) {
        (PosInf, _) | (_, PosInf) => PosInf,
        (NegInf, _) | (_, NegInf) => NegInf,
        (Finite(x), Finite(y)) => Finite(x + y),
    }
}

/// `h↙f`: the least real `g` with `g + f ≥ h`, i.e. `h − f` on finite values.
pub fn r_imp(h: &ExtendedRational, f: &ExtendedRational) -> ExtendedRational {
    match (h, f) {
        (NegInf, _) | (_, PosInf) => NegInf,
        (_, NegInf) | (PosInf, _) => PosInf,
        (Finite(x), Finite(y)) => Finite(x - y),
    }
}

/// The two-object category with `X(x,y) = −1`, `X(y,x) = 1` and zero on the diagonal.
pub fn example_category() -> [[ExtendedRational; 2]; 2] {
    [[ExtendedRational::zero(), ExtendedRational::int(-1)], [ExtendedRational::int(1), ExtendedRational::zero()]]
}

pub fn default_samples() -> Vec<ExtendedRational> {
    vec![
        ExtendedRational::int(-3),
        ExtendedRational::ratio(-5, 2),
        ExtendedRational::int(-1),
        ExtendedRational::zero(),
        ExtendedRational::ratio(1, 2),
        ExtendedRational::int(2),
        PosInf,
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleCheck {
    pub t: ExtendedRational,
    pub presheaf: [ExtendedRational; 2],
    pub presheaf_valid: bool,
    /// `(Y_X)^♮(μ, −)`.
    pub yoneda_row: [ExtendedRational; 2],
    pub yoneda_expected: [ExtendedRational; 2],
    /// `((Y_X)^♮↘X)(−, μ)`.
    pub star_row: [ExtendedRational; 2],
    pub star_expected: [ExtendedRational; 2],
    /// `PX(μ, μ)` and `(((Y_X)^♮↘X)∘(Y_X)^♮)(μ, μ)`.
    pub unit_lhs: ExtendedRational,
    pub unit_rhs: ExtendedRational,
    pub unit_holds: bool,
}

impl SampleCheck {
    pub fn rows_match(&self) -> bool {
        self.yoneda_row == self.yoneda_expected && self.star_row == self.star_expected
    }

    pub fn passes(&self) -> bool {
        self.presheaf_valid && self.rows_match() && self.unit_holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Example2Report {
    pub samples: Vec<SampleCheck>,
    pub notes: Vec<String>,
}

impl Example2Report {
    pub fn all_pass(&self) -> bool {
        self.samples.iter().all(SampleCheck::passes)
    }
}

/// Checks one candidate value `t = μ(x)` with `μ = (t, t+1)` by direct matrix evaluation.
pub fn check_sample(t: &ExtendedRational) -> SampleCheck {
    let x = example_category();
    let one = Finite(BigRational::one());
    let mu = [t.clone(), r_compose(t, &one)];
    // μ(a) + X(b,a) ≥ μ(b)
    let presheaf_valid = (0..2).all(|a| (0..2).all(|b| r_leq(&r_compose(&mu[a], &x[b][a]), &mu[b])));
    // (Y_X)^♮(μ, z) = ⋁_a μ(a) → X(a, z)
    let yoneda_row: [ExtendedRational; 2] =
        std::array::from_fn(|z| r_join_all(&[r_imp(&x[0][z], &mu[0]), r_imp(&x[1][z], &mu[1])]));
    // ((Y_X)^♮↘X)(w, μ) = ⋀_z (Y_X)^♮(μ, z) ↘ X(w, z)
    let star_row: [ExtendedRational; 2] =
        std::array::from_fn(|w| r_meet_all(&[r_imp(&x[w][0], &yoneda_row[0]), r_imp(&x[w][1], &yoneda_row[1])]));
    let unit_lhs = r_meet_all(&[r_imp(&mu[0], &mu[0]), r_imp(&mu[1], &mu[1])]);
    let unit_rhs = r_join_all(&[r_compose(&star_row[0], &yoneda_row[0]), r_compose(&star_row[1], &yoneda_row[1])]);
    let unit_holds = r_leq(&unit_lhs, &unit_rhs);
    let yoneda_expected = [t.neg(), r_compose(&ExtendedRational::int(-1), &t.neg())];
    let star_expected = [t.clone(), r_compose(&one, t)];
    SampleCheck {
        t: t.clone(),
        presheaf: mu,
        presheaf_valid,
        yoneda_row,
        yoneda_expected,
        star_row,
        star_expected,
        unit_lhs,
        unit_rhs,
        unit_holds,
    }
}

pub fn example2_verify(samples: &[ExtendedRational]) -> Example2Report {
    Example2Report {
        samples: samples.iter().map(check_sample).collect(),
        notes: vec![
            "checked per sample; the presheaf space is infinite".into(),
            "expected: X is not cocomplete".into(),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> ExtendedRational {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r_compose(&e("0"), &e("7/3")), e("7/3"));
        assert_eq!(r_compose(&e("-1"), &e("1")), e("0"));
        assert_eq!(r_compose(&e("-inf"), &e("+inf")), e("+inf"));
        assert_eq!(r_imp(&e("5/2"), &e("5/2")), e("0"));
        assert_eq!(r_imp(&e("-1"), &e("0")), e("-1"));
        assert_eq!(r_imp(&e("+inf"), &e("4")), e("+inf"));
        assert_eq!(e("−5/2"), ExtendedRational::ratio(-5, 2));
        assert!(r_leq(&e("3"), &e("1")));
        assert!("1/0".parse::<ExtendedRational>().is_err());
    }

    #[test]
    fn finite_samples() {
        let s = check_sample(&e("0"));
        assert_eq!(s.yoneda_row, [e("0"), e("-1")]);
        assert_eq!(s.star_row, [e("0"), e("1")]);
        assert!(s.passes());
        let s = check_sample(&e("-5/2"));
        assert_eq!(s.yoneda_row, [e("5/2"), e("3/2")]);
        assert_eq!(s.star_row, [e("-5/2"), e("-3/2")]);
        assert!(s.passes());
    }

    #[test]
    fn infinite_edge() {
        let s = check_sample(&e("+inf"));
        assert!(s.presheaf_valid && s.rows_match());
        // PX(μ,μ) is the top −∞ while the composite absorbs to the bottom +∞
        assert_eq!((s.unit_lhs.clone(), s.unit_rhs.clone()), (e("-inf"), e("+inf")));
        assert!(!s.unit_holds);
    }
}
