//! Exact scalar arithmetic: arbitrary-precision rationals, univariate
//! polynomials over the rationals, and normalized rational functions in a
//! single variable `t` supporting evaluation at `t = 0`.
//!
//! Everything here is immutable after construction and eagerly normalized:
//! rationals are kept reduced with a positive denominator, polynomials carry
//! no trailing zero coefficients, and rational functions always have a monic
//! denominator coprime to the numerator. Equality is structural equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    /// The denominator still vanishes at `t = 0` after full cancellation,
    /// i.e. the function has a genuine (non-removable) pole there.
    #[error("residual pole at t = 0 in {0}")]
    ResidualPole(String),
    #[error("malformed rational literal {0:?}")]
    BadLiteral(String),
}

/// Builds the unique reduced representative `n/d` with positive denominator.
pub fn rat_normalize(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Rational, ArithError> {
    let d = d.into();
    if d.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(Rational::new(n.into(), d))
}

/// Shorthand for small rationals. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    rat_normalize(n, d).expect("nonzero denominator")
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Renders a rational as `p/q`, or just `p` when `q = 1`. This is the
/// serialization format used by every JSON export.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the `p/q` (or bare `p`) format accepted by [`format_rational`].
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let bad = || ArithError::BadLiteral(s.to_string());
    match s.split_once('/') {
        None => {
            let n: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let n: BigInt = p.trim().parse().map_err(|_| bad())?;
            let d: BigInt = q.trim().parse().map_err(|_| bad())?;
            rat_normalize(n, d)
        }
    }
}

/// Univariate polynomial over [`Rational`], coefficients stored lowest
/// degree first. The zero polynomial is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    /// The linear polynomial `b + a*t`.
    pub fn linear(b: Rational, a: Rational) -> Self {
        Polynomial::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of `t^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Index of the lowest nonzero coefficient, `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exact division by `t^m`; `None` if some lower coefficient is nonzero.
    pub fn shift_down(&self, m: usize) -> Option<Polynomial> {
        if m == 0 {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if self.coeffs.len() < m || self.coeffs[..m].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Polynomial::new(self.coeffs[m..].to_vec()))
    }

    pub fn eval_zero(&self) -> Rational {
        self.coeff(0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), ArithError> {
        let dlead = divisor.leading().ok_or(ArithError::DivisionByZero)?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let top = rem[k + ddeg].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / dlead;
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                let v = &rem[k + j] - dj * &q;
                rem[k + j] = v;
            }
            quot[k] = q;
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.div_rem(&y).expect("nonzero divisor").1;
            x = y;
            y = r;
        }
        x.monic()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &out[i + j] + &(a * b);
                out[i + j] = v;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c < &Rational::zero() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let mag_one = mag.is_one();
            match (k, mag_one) {
                (0, _) => write!(f, "{}", format_rational(&mag))?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{}*t", format_rational(&mag))?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{}*t^{k}", format_rational(&mag))?,
            }
        }
        Ok(())
    }
}

/// Quotient of two polynomials in `t`, kept fully normalized: the
/// denominator is monic, nonzero, and coprime to the numerator, so equality
/// of values is structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            let num = num.div_rem(&g).expect("gcd nonzero").0;
            let den = den.div_rem(&g).expect("gcd nonzero").0;
            (num, den)
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lead.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// The coordinate function `t`.
    pub fn t() -> Self {
        RationalFunction::from_polynomial(Polynomial::t())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.den.degree() == Some(0) && self.num.degree().map_or(true, |d| d == 0)
    }

    /// The value as a rational constant, if the function is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.num.eval_zero())
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Value at `t = 0` after cancellation. Because the representation is
    /// already reduced, a vanishing denominator here is a genuine pole.
    pub fn eval_at_zero(&self) -> Result<Rational, ArithError> {
        let d0 = self.den.eval_zero();
        if d0.is_zero() {
            return Err(ArithError::ResidualPole(self.to_string()));
        }
        Ok(self.num.eval_zero() / d0)
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        RationalFunction::from_rational(c)
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunction::normalized(num, &self.den * &rhs.den)
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics when dividing by the zero function; use [`RationalFunction::checked_div`]
/// where the divisor is not known to be nonzero.
impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: RationalFunction) -> RationalFunction {
        self.checked_div(&rhs).expect("division by zero function")
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::from_polynomial(Polynomial::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::from_polynomial(Polynomial::one())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else if self.num.degree().map_or(true, |d| d == 0) {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(coeffs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn ipoly(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn rat_normalize_reduces() {
        assert_eq!(rat_normalize(2, 4).unwrap(), rat(1, 2));
        let z = rat_normalize(0, 5).unwrap();
        assert!(z.is_zero());
        assert!(z.denom().is_one());
        assert_eq!(rat_normalize(3, -6).unwrap(), rat(-1, 2));
        assert_eq!(rat_normalize(1, 0), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn rational_string_round_trip() {
        assert_eq!(format_rational(&rat(1, 2)), "1/2");
        assert_eq!(format_rational(&rat_int(-7)), "-7");
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat_int(-7));
        assert_eq!(parse_rational("3/-6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("1/0"), Err(ArithError::DivisionByZero));
        assert!(matches!(parse_rational("x"), Err(ArithError::BadLiteral(_))));
    }

    #[test]
    fn additive_inverse_cancels() {
        let one_over_t = RationalFunction::new(Polynomial::one(), Polynomial::t()).unwrap();
        let sum = one_over_t.clone() + (-one_over_t);
        assert!(sum.is_zero());
    }

    #[test]
    fn cancellation_to_constant() {
        // 1/(t-1) * (t-1) = 1
        let f = RationalFunction::new(Polynomial::one(), ipoly(&[-1, 1])).unwrap();
        let g = RationalFunction::from_polynomial(ipoly(&[-1, 1]));
        assert_eq!(f * g, RationalFunction::one());
    }

    #[test]
    fn self_quotient_is_one() {
        let t = RationalFunction::t();
        assert_eq!(t.clone().checked_div(&t).unwrap(), RationalFunction::one());
    }

    #[test]
    fn division_by_zero_function() {
        let t = RationalFunction::t();
        assert_eq!(
            t.checked_div(&RationalFunction::zero()),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn eval_at_zero_examples() {
        // (t^2 + 2t)/t normalizes to t + 2
        let f = RationalFunction::new(ipoly(&[0, 2, 1]), Polynomial::t()).unwrap();
        assert_eq!(f.num(), &ipoly(&[2, 1]));
        assert_eq!(f.eval_at_zero().unwrap(), rat_int(2));

        let pole = RationalFunction::new(Polynomial::one(), Polynomial::t()).unwrap();
        assert!(matches!(
            pole.eval_at_zero(),
            Err(ArithError::ResidualPole(_))
        ));

        // (3t + 6)/(2t + 4) cancels to the constant 3/2
        let f = RationalFunction::new(ipoly(&[6, 3]), ipoly(&[4, 2])).unwrap();
        assert!(f.is_constant());
        assert_eq!(f.eval_at_zero().unwrap(), rat(3, 2));
    }

    #[test]
    fn denominator_is_monic_after_ops() {
        let f = RationalFunction::new(ipoly(&[1]), ipoly(&[4, 2])).unwrap();
        assert_eq!(f.den().leading().unwrap(), &Rational::one());
        assert_eq!(f.den(), &ipoly(&[2, 1]).monic());
    }

    #[test]
    fn polynomial_div_rem_round_trip() {
        let a = poly(&[(1, 2), (0, 1), (3, 1), (1, 1)]);
        let b = ipoly(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        let back = &(&q * &b) + &r;
        assert_eq!(back, a);
        assert!(r.degree() < b.degree());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(arb_rational(), 0..5).prop_map(Polynomial::new)
    }

    fn arb_nonzero_poly() -> impl Strategy<Value = Polynomial> {
        arb_poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    fn arb_ratfun() -> impl Strategy<Value = RationalFunction> {
        (arb_poly(), arb_nonzero_poly())
            .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
    }

    fn check_invariants(f: &RationalFunction) {
        assert!(!f.den().is_zero());
        assert_eq!(f.den().leading(), Some(&Rational::one()));
        if f.is_zero() {
            assert_eq!(f.den(), &Polynomial::one());
        } else {
            let g = Polynomial::gcd(f.num(), f.den());
            assert_eq!(g.degree(), Some(0), "common factor {g} in {f}");
        }
    }

    proptest! {
        #[test]
        fn ratfun_ops_preserve_invariants(f in arb_ratfun(), g in arb_ratfun()) {
            check_invariants(&(f.clone() + g.clone()));
            check_invariants(&(f.clone() - g.clone()));
            check_invariants(&(f.clone() * g.clone()));
            if !g.is_zero() {
                check_invariants(&f.clone().checked_div(&g).unwrap());
            }
        }

        #[test]
        fn eval_at_zero_is_multiplicative(f in arb_ratfun(), g in arb_ratfun()) {
            if let (Ok(a), Ok(b)) = (f.eval_at_zero(), g.eval_at_zero()) {
                let prod = (f * g).eval_at_zero().unwrap();
                prop_assert_eq!(prod, a * b);
            }
        }

        #[test]
        fn rational_embedding_round_trips(c in arb_rational()) {
            let f = RationalFunction::from_rational(c.clone());
            prop_assert_eq!(f.eval_at_zero().unwrap(), c);
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_nonzero_poly()) {
            let g = Polynomial::gcd(&a, &b);
            prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
            prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
        }
    }
}
