//! Exact scalars: Laurent polynomials in `v`, `s` and their fraction field.

mod dense;
mod laurent;
mod parse;
mod rational;

pub use laurent::{LaurentPoly, Monomial};
pub use parse::{parse_poly, parse_rational};
pub use rational::RationalFunction;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// The quantum integer `[i] = (s^i - s^{-i}) / (s - s^{-1})`, for any integer `i`.
///
/// Always a Laurent polynomial: `[i] = s^{i-1} + s^{i-3} + ... + s^{1-i}`
/// for `i >= 0` and `[-i] = -[i]`.
pub fn qint(i: i32) -> RationalFunction {
    RationalFunction::from_poly(qint_poly(i))
}

pub(crate) fn qint_poly(i: i32) -> LaurentPoly {
    let n = i.abs();
    let sign = if i < 0 { -1 } else { 1 };
    LaurentPoly::in_s((0..n).map(|k| (n - 1 - 2 * k, sign)))
}

/// `s - s^{-1}`
pub fn z() -> RationalFunction {
    RationalFunction::from_poly(z_poly())
}

pub(crate) fn z_poly() -> LaurentPoly {
    LaurentPoly::in_s([(1, 1), (-1, -1)])
}

/// `v^{-1} - v`
pub(crate) fn delta_numerator() -> LaurentPoly {
    LaurentPoly::from_terms([
        (Monomial::new(-1, 0), num_rational::BigRational::from_integer(1.into())),
        (Monomial::new(1, 0), num_rational::BigRational::from_integer((-1).into())),
    ])
}

/// Value of a disjoint circle, `δ = (v^{-1} - v) / (s - s^{-1})`.
pub fn delta() -> RationalFunction {
    RationalFunction::new(delta_numerator(), z_poly()).expect("nonzero denominator")
}

/// Factorial-type product `[n][n-1]...[1]`.
pub fn qfactorial(n: u32) -> RationalFunction {
    let mut acc = LaurentPoly::one();
    for i in 1..=n as i32 {
        acc = &acc * &qint_poly(i);
    }
    RationalFunction::from_poly(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(text: &str) -> RationalFunction {
        text.parse().unwrap()
    }

    #[test]
    fn division_examples() {
        assert!((&RationalFunction::v() / &RationalFunction::v()).is_one());
        let s_inv = RationalFunction::monomial(0, -1);
        assert!((&RationalFunction::s() * &s_inv).is_one());
        assert_eq!(&z() * &delta(), rf("v^-1-v"));
        assert_eq!(
            RationalFunction::one().checked_div(&RationalFunction::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn quantum_integers() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(2), rf("s^-1+s"));
        assert_eq!(qint(-3), -&qint(3));
        for i in -10..=10 {
            let lhs = &qint(i) * &z();
            let rhs = RationalFunction::from_poly(&LaurentPoly::monomial(0, i) - &LaurentPoly::monomial(0, -i));
            assert_eq!(lhs, rhs, "i = {i}");
            assert!(qint(i).is_polynomial());
        }
    }

    #[test]
    fn bar_examples() {
        assert_eq!(RationalFunction::s().bar(), RationalFunction::monomial(0, -1));
        assert_eq!(delta().bar(), delta());
        assert_eq!(qint(2).bar(), qint(2));
        let x = rf("(3*v^2*s-1/2)/(s^3+v)");
        assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn canonical_denominator() {
        let x = rf("(v*s^2-v)/(2*s^3-2*s)");
        // (s^2-1) cancels, s is a unit
        assert_eq!(x, rf("1/2*v*s^-1"));
        let y = rf("(1)/(2*s+4)");
        assert_eq!(y.denominator().to_string(), "1+1/2*s");
        assert_eq!(y.numerator().to_string(), "1/4");
    }

    #[test]
    fn rendering_roundtrip() {
        let p: LaurentPoly = "-3*v^-2*s^4+v^-1+2/3*s".parse().unwrap();
        assert_eq!(p.to_string(), "-3*v^-2*s^4+v^-1+2/3*s");
        let d = delta();
        assert_eq!(d.to_string().parse::<RationalFunction>().unwrap(), d);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert!("v^".parse::<LaurentPoly>().is_err());
        assert!("3*".parse::<LaurentPoly>().is_err());
        assert!("(1)/(0)".parse::<RationalFunction>().is_err());
    }

    #[test]
    fn bivariate_gcd_cancels() {
        // (v - s)(v + s^2) / ((v - s)(1 + v s))
        let a: LaurentPoly = "v-s".parse().unwrap();
        let b: LaurentPoly = "v+s^2".parse().unwrap();
        let c: LaurentPoly = "1+v*s".parse().unwrap();
        let x = RationalFunction::new(&a * &b, &a * &c).unwrap();
        assert_eq!(x, RationalFunction::new(b, c).unwrap());
    }
}
