//! Exact ratios and compounded ratios.
//!
//! A ratio is kept in lowest terms with a positive denominator, so two
//! ratios of equal value are structurally equal. Compounding is
//! multiplication of ratios; the rearrangement rule for an equality
//! `A/B = (C/E)·(D/F)` is provided by [`rearrange_prop10`].

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatioError {
    #[error("ratio with zero denominator")]
    ZeroDenominator,
    #[error("quantity {0} is zero but would be used as a denominator")]
    ZeroQuantity(Symbol),
    #[error("invalid rearrangement target {numerator}/{denominator}: numerator must be one of A, E, F and denominator one of B, C, D")]
    InvalidTarget { numerator: Symbol, denominator: Symbol },
    #[error("premise A/B = (C/E)·(D/F) does not hold for the given quantities")]
    PremiseViolated,
    #[error("a compounded ratio needs at least one factor")]
    EmptyCompound,
    #[error("cannot parse ratio from {0:?}")]
    Parse(String),
}

/// A ratio of two integers in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ExactRatio(BigRational);

impl ExactRatio {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self, RatioError> {
        let denominator = denominator.into();
        if denominator.is_zero() {
            return Err(RatioError::ZeroDenominator);
        }
        Ok(Self(BigRational::new(numerator.into(), denominator)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn recip(&self) -> Result<Self, RatioError> {
        if self.is_zero() {
            return Err(RatioError::ZeroDenominator);
        }
        Ok(Self(self.0.recip()))
    }

    /// Approximate value, for display only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for ExactRatio {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for ExactRatio {
    type Err = RatioError;

    /// Accepts `"n"` or `"n/d"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|_| RatioError::Parse(s.to_owned()));
        match s.split_once('/') {
            Some((n, d)) => Self::new(parse(n)?, parse(d)?),
            None => Ok(Self::from_integer(parse(s)?)),
        }
    }
}

impl TryFrom<String> for ExactRatio {
    type Error = RatioError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<ExactRatio> for String {
    fn from(r: ExactRatio) -> String {
        r.to_string()
    }
}

impl Mul for &ExactRatio {
    type Output = ExactRatio;
    fn mul(self, rhs: &ExactRatio) -> ExactRatio {
        ExactRatio(&self.0 * &rhs.0)
    }
}

impl Mul for ExactRatio {
    type Output = ExactRatio;
    fn mul(self, rhs: ExactRatio) -> ExactRatio {
        ExactRatio(self.0 * rhs.0)
    }
}

/// The ratio compounded of `r1` and `r2`. When `r1 = K/L` and `r2 = L/M`
/// the result is exactly `K/M`.
pub fn compound(r1: &ExactRatio, r2: &ExactRatio) -> ExactRatio {
    r1 * r2
}

/// An ordered product of ratios.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompoundedRatio {
    factors: Vec<ExactRatio>,
}

impl CompoundedRatio {
    pub fn new(factors: Vec<ExactRatio>) -> Result<Self, RatioError> {
        if factors.is_empty() {
            return Err(RatioError::EmptyCompound);
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[ExactRatio] {
        &self.factors
    }

    pub fn value(&self) -> ExactRatio {
        self.factors.iter().fold(ExactRatio::one(), |acc, r| &acc * r)
    }
}

impl fmt::Display for CompoundedRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" · ")?;
            }
            write!(f, "({r})")?;
        }
        Ok(())
    }
}

/// Names of the six quantities in `A/B = (C/E)·(D/F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Symbol {
    /// Quantities that may stand as the numerator of a rearranged left side.
    pub const NUMERATOR_CLASS: [Symbol; 3] = [Symbol::A, Symbol::E, Symbol::F];
    /// Quantities that may stand as the denominator of a rearranged left side.
    pub const DENOMINATOR_CLASS: [Symbol; 3] = [Symbol::B, Symbol::C, Symbol::D];
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Symbol::A => "A",
            Symbol::B => "B",
            Symbol::C => "C",
            Symbol::D => "D",
            Symbol::E => "E",
            Symbol::F => "F",
        };
        f.write_str(s)
    }
}

impl FromStr for Symbol {
    type Err = RatioError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" => Ok(Symbol::A),
            "B" => Ok(Symbol::B),
            "C" => Ok(Symbol::C),
            "D" => Ok(Symbol::D),
            "E" => Ok(Symbol::E),
            "F" => Ok(Symbol::F),
            other => Err(RatioError::Parse(other.to_owned())),
        }
    }
}

/// Values bound to the six symbols of `A/B = (C/E)·(D/F)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sextuple {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub e: BigInt,
    pub f: BigInt,
}

impl Sextuple {
    pub fn get(&self, s: Symbol) -> &BigInt {
        match s {
            Symbol::A => &self.a,
            Symbol::B => &self.b,
            Symbol::C => &self.c,
            Symbol::D => &self.d,
            Symbol::E => &self.e,
            Symbol::F => &self.f,
        }
    }

    fn ratio(&self, num: Symbol, den: Symbol) -> Result<ExactRatio, RatioError> {
        let d = self.get(den);
        if d.is_zero() {
            return Err(RatioError::ZeroQuantity(den));
        }
        ExactRatio::new(self.get(num).clone(), d.clone())
    }

    /// The premise as `(A/B, (C/E)·(D/F))`.
    pub fn premise(&self) -> Result<(ExactRatio, CompoundedRatio), RatioError> {
        let lhs = self.ratio(Symbol::A, Symbol::B)?;
        let rhs = CompoundedRatio::new(vec![self.ratio(Symbol::C, Symbol::E)?, self.ratio(Symbol::D, Symbol::F)?])?;
        Ok((lhs, rhs))
    }

    pub fn premise_holds(&self) -> Result<bool, RatioError> {
        let (lhs, rhs) = self.premise()?;
        Ok(lhs == rhs.value())
    }
}

/// A rearranged equality `X/Y = (P/Q)·(R/S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rearrangement {
    pub numerator: Symbol,
    pub denominator: Symbol,
    /// `(numerator, denominator)` symbol pairs of the two factors.
    pub factors: [(Symbol, Symbol); 2],
    pub lhs: ExactRatio,
    pub rhs: CompoundedRatio,
}

impl Rearrangement {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs.value()
    }
}

impl fmt::Display for Rearrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [(p, q), (r, s)] = self.factors;
        write!(
            f,
            "{}/{} = ({}/{})·({}/{}): {} = {}",
            self.numerator,
            self.denominator,
            p,
            q,
            r,
            s,
            self.lhs,
            self.rhs.value()
        )
    }
}

/// Rearranges `A/B = (C/E)·(D/F)` so that `numerator/denominator` stands
/// alone on the left.
///
/// `numerator` is drawn from `{A, E, F}` and `denominator` from `{B, C, D}`.
/// The two factors on the right take their numerators from what remains of
/// `{B, C, D}` and their denominators from what remains of `{A, E, F}`, each
/// in alphabetical order. For the target `A/C` this gives `(B/E)·(D/F)`.
pub fn rearrange_prop10(q: &Sextuple, numerator: Symbol, denominator: Symbol) -> Result<Rearrangement, RatioError> {
    if !Symbol::NUMERATOR_CLASS.contains(&numerator) || !Symbol::DENOMINATOR_CLASS.contains(&denominator) {
        return Err(RatioError::InvalidTarget { numerator, denominator });
    }
    if !q.premise_holds()? {
        return Err(RatioError::PremiseViolated);
    }
    let tops: Vec<Symbol> = Symbol::DENOMINATOR_CLASS.into_iter().filter(|s| *s != denominator).collect();
    let bottoms: Vec<Symbol> = Symbol::NUMERATOR_CLASS.into_iter().filter(|s| *s != numerator).collect();
    let factors = [(tops[0], bottoms[0]), (tops[1], bottoms[1])];

    let lhs = q.ratio(numerator, denominator)?;
    let rhs = CompoundedRatio::new(vec![q.ratio(tops[0], bottoms[0])?, q.ratio(tops[1], bottoms[1])?])?;
    Ok(Rearrangement { numerator, denominator, factors, lhs, rhs })
}

/// All nine rearrangements of the premise.
pub fn all_rearrangements(q: &Sextuple) -> Result<Vec<Rearrangement>, RatioError> {
    let mut out = Vec::with_capacity(9);
    for x in Symbol::NUMERATOR_CLASS {
        for y in Symbol::DENOMINATOR_CLASS {
            out.push(rearrange_prop10(q, x, y)?);
        }
    }
    Ok(out)
}

/// Witness of `(a/b)·(c/d) = (a/d)·(c/b)`.
pub fn commute_check(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Result<bool, RatioError> {
    if b.is_zero() {
        return Err(RatioError::ZeroQuantity(Symbol::B));
    }
    if d.is_zero() {
        return Err(RatioError::ZeroQuantity(Symbol::D));
    }
    let r = |n: &BigInt, m: &BigInt| ExactRatio::new(n.clone(), m.clone());
    let left = &r(a, b)? * &r(c, d)?;
    let right = &r(a, d)? * &r(c, b)?;
    Ok(left == right)
}
