//! Exact arithmetic in Q(xi) for xi a primitive 6th root of unity.
//!
//! Elements are pairs `r0 + r1*xi` of rationals, reduced by the minimal
//! polynomial `xi^2 = xi - 1`. The representation is canonical, so equality
//! is coordinate-wise and exact; no floating point appears anywhere.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::Error;

/// An element of Q(xi) with xi^2 = xi - 1 (xi primitive of order 6).
///
/// `r0` is the coefficient of 1 and `r1` the coefficient of xi.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycQ6 {
    pub r0: BigRational,
    pub r1: BigRational,
}

impl CycQ6 {
    pub fn new(r0: BigRational, r1: BigRational) -> Self {
        CycQ6 { r0, r1 }
    }

    pub fn zero() -> Self {
        CycQ6 {
            r0: BigRational::zero(),
            r1: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        CycQ6 {
            r0: BigRational::one(),
            r1: BigRational::zero(),
        }
    }

    pub fn xi() -> Self {
        CycQ6 {
            r0: BigRational::zero(),
            r1: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        CycQ6 {
            r0: BigRational::from_integer(BigInt::from(n)),
            r1: BigRational::zero(),
        }
    }

    /// The rational number `num/den`. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        CycQ6 {
            r0: BigRational::new(BigInt::from(num), BigInt::from(den)),
            r1: BigRational::zero(),
        }
    }

    /// xi^k for any integer k (k is reduced mod 6).
    ///
    /// The six powers are 1, xi, xi-1, -1, -xi, 1-xi.
    pub fn xi_pow(k: i64) -> Self {
        let k = k.rem_euclid(6);
        let (r0, r1): (i64, i64) = match k {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 1),
            3 => (-1, 0),
            4 => (0, -1),
            _ => (1, -1),
        };
        CycQ6 {
            r0: BigRational::from_integer(BigInt::from(r0)),
            r1: BigRational::from_integer(BigInt::from(r1)),
        }
    }

    /// Lambda = (xi - 1)(xi + 1)^{-1}, the scalar the cross relations use.
    pub fn lambda() -> Self {
        (Self::xi() - Self::one()) * (Self::xi() + Self::one()).inv().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.r0.is_zero() && self.r1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.r0.is_one() && self.r1.is_zero()
    }

    /// Image under the nontrivial field automorphism xi |-> 1 - xi (= xi^5).
    pub fn galois_conj(&self) -> Self {
        CycQ6 {
            r0: &self.r0 + &self.r1,
            r1: -self.r1.clone(),
        }
    }

    /// Field norm to Q: x * conj(x) = r0^2 + r0*r1 + r1^2.
    pub fn norm(&self) -> BigRational {
        &self.r0 * &self.r0 + &self.r0 * &self.r1 + &self.r1 * &self.r1
    }

    /// Multiplicative inverse; `Err(DivisionByZero)` on zero.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.galois_conj();
        Ok(CycQ6 {
            r0: c.r0 / &n,
            r1: c.r1 / &n,
        })
    }

    /// Integer power, negative exponents via the inverse.
    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let (mut base, mut e) = if e < 0 {
            (self.inv()?, (-e) as u64)
        } else {
            (self.clone(), e as u64)
        };
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Canonical text form `p/q + r/s*xi`, exact round-trip with [`CycQ6::from_str`].
    pub fn render(&self) -> String {
        format!(
            "{}/{} + {}/{}*xi",
            self.r0.numer(),
            self.r0.denom(),
            self.r1.numer(),
            self.r1.denom()
        )
    }
}

impl fmt::Display for CycQ6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for CycQ6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

impl FromStr for CycQ6 {
    type Err = Error;

    /// Parses the canonical form `p/q + r/s*xi`; also accepts the short
    /// forms `p/q`, `p`, `r/s*xi`, `xi`, `-xi` and `p + r*xi`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        // Split on the last top-level " + " or " - " before a *xi term.
        if let Some(idx) = s.rfind("*xi") {
            // coefficient of xi runs backwards from idx to the separating +/-.
            let head = &s[..idx];
            let (const_part, xi_part, xi_sign) = match (head.rfind(" + "), head.rfind(" - ")) {
                (Some(p), Some(m)) if p > m => (&head[..p], &head[p + 3..], 1),
                (Some(_), Some(m)) => (&head[..m], &head[m + 3..], -1),
                (Some(p), None) => (&head[..p], &head[p + 3..], 1),
                (None, Some(m)) => (&head[..m], &head[m + 3..], -1),
                (None, None) => ("0", head, 1),
            };
            let r0 = parse_rational(const_part)?;
            let xi_part = xi_part.trim();
            let r1 = if xi_part.is_empty() {
                BigRational::one()
            } else {
                parse_rational(xi_part)?
            };
            let r1 = if xi_sign < 0 { -r1 } else { r1 };
            return Ok(CycQ6::new(r0, r1));
        }
        if s == "xi" {
            return Ok(CycQ6::xi());
        }
        if s == "-xi" {
            return Ok(-CycQ6::xi());
        }
        Ok(CycQ6::new(parse_rational(s)?, BigRational::zero()))
    }
}

impl Serialize for CycQ6 {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for CycQ6 {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Neg for CycQ6 {
    type Output = CycQ6;
    fn neg(self) -> CycQ6 {
        CycQ6 {
            r0: -self.r0,
            r1: -self.r1,
        }
    }
}

impl Neg for &CycQ6 {
    type Output = CycQ6;
    fn neg(self) -> CycQ6 {
        CycQ6 {
            r0: -self.r0.clone(),
            r1: -self.r1.clone(),
        }
    }
}

impl Add for &CycQ6 {
    type Output = CycQ6;
    fn add(self, rhs: &CycQ6) -> CycQ6 {
        CycQ6 {
            r0: &self.r0 + &rhs.r0,
            r1: &self.r1 + &rhs.r1,
        }
    }
}

impl Sub for &CycQ6 {
    type Output = CycQ6;
    fn sub(self, rhs: &CycQ6) -> CycQ6 {
        CycQ6 {
            r0: &self.r0 - &rhs.r0,
            r1: &self.r1 - &rhs.r1,
        }
    }
}

impl Mul for &CycQ6 {
    type Output = CycQ6;
    /// (a + b*xi)(c + d*xi) = (ac - bd) + (ad + bc + bd)*xi, using xi^2 = xi - 1.
    fn mul(self, rhs: &CycQ6) -> CycQ6 {
        let ac = &self.r0 * &rhs.r0;
        let bd = &self.r1 * &rhs.r1;
        let ad_bc = &self.r0 * &rhs.r1 + &self.r1 * &rhs.r0;
        CycQ6 {
            r0: ac - &bd,
            r1: ad_bc + bd,
        }
    }
}

impl Div for &CycQ6 {
    type Output = CycQ6;
    fn div(self, rhs: &CycQ6) -> CycQ6 {
        self * &rhs.inv().expect("division by zero in CycQ6")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CycQ6 {
            type Output = CycQ6;
            fn $method(self, rhs: CycQ6) -> CycQ6 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycQ6> for CycQ6 {
            type Output = CycQ6;
            fn $method(self, rhs: &CycQ6) -> CycQ6 {
                (&self).$method(rhs)
            }
        }
        impl $trait<CycQ6> for &CycQ6 {
            type Output = CycQ6;
            fn $method(self, rhs: CycQ6) -> CycQ6 {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&CycQ6> for CycQ6 {
    fn add_assign(&mut self, rhs: &CycQ6) {
        self.r0 += &rhs.r0;
        self.r1 += &rhs.r1;
    }
}

impl SubAssign<&CycQ6> for CycQ6 {
    fn sub_assign(&mut self, rhs: &CycQ6) {
        self.r0 -= &rhs.r0;
        self.r1 -= &rhs.r1;
    }
}

impl MulAssign<&CycQ6> for CycQ6 {
    fn mul_assign(&mut self, rhs: &CycQ6) {
        *self = (&*self) * rhs;
    }
}

/// The two admissible choices of theta, the scalar with theta^2 = xi^2.
///
/// The paper only pins theta down up to sign; every dimension-valued output
/// must be invariant under flipping it, which the test suite asserts.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Theta {
    Xi,
    NegXi,
}

impl Default for Theta {
    fn default() -> Self {
        Theta::Xi
    }
}

impl Theta {
    pub fn value(self) -> CycQ6 {
        match self {
            Theta::Xi => CycQ6::xi(),
            Theta::NegXi => -CycQ6::xi(),
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "xi" => Ok(Theta::Xi),
            "-xi" => Ok(Theta::NegXi),
            other => Err(Error::Parse(format!("unknown theta `{other}`"))),
        }
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theta::Xi => f.write_str("xi"),
            Theta::NegXi => f.write_str("-xi"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_squared_is_xi_minus_one() {
        let xi = CycQ6::xi();
        assert_eq!(&xi * &xi, &xi - &CycQ6::one());
    }

    #[test]
    fn xi_has_order_six() {
        let xi = CycQ6::xi();
        assert_eq!(xi.pow(6).unwrap(), CycQ6::one());
        assert_eq!(xi.pow(3).unwrap(), -CycQ6::one());
        for k in 1..6 {
            assert_ne!(xi.pow(k).unwrap(), CycQ6::one(), "xi^{k} = 1");
        }
        for k in -6..12 {
            assert_eq!(CycQ6::xi_pow(k), xi.pow(k).unwrap());
        }
    }

    /// Independent oracle for Lambda: solve (xi+1)w = 1 as a 2x2 rational
    /// linear system on the coordinates of w, then multiply by (xi-1).
    #[test]
    fn lambda_equals_two_xi_minus_one_over_three() {
        // (xi+1)(w0 + w1 xi) = w0 + w1 xi + w0 xi + w1 (xi - 1)
        //                    = (w0 - w1) + (w0 + 2 w1) xi = 1
        // => w0 - w1 = 1, w0 + 2 w1 = 0 => w1 = -1/3, w0 = 2/3.
        let w = CycQ6::new(
            BigRational::new(2.into(), 3.into()),
            BigRational::new((-1).into(), 3.into()),
        );
        assert_eq!(&w * &(CycQ6::xi() + CycQ6::one()), CycQ6::one());
        let lambda = (CycQ6::xi() - CycQ6::one()) * &w;
        let expected = CycQ6::new(
            BigRational::new((-1).into(), 3.into()),
            BigRational::new(2.into(), 3.into()),
        );
        assert_eq!(lambda, expected, "Lambda = (2*xi - 1)/3");
        assert_eq!(CycQ6::lambda(), expected);
    }

    #[test]
    fn lambda_inverse_is_one_minus_two_xi() {
        // Used all over the double's cross relations: Lambda^{-1} = xi^4 + xi^5.
        let expected = CycQ6::xi_pow(4) + CycQ6::xi_pow(5);
        assert_eq!(CycQ6::lambda().inv().unwrap(), expected);
        assert_eq!(expected, CycQ6::from_int(1) - CycQ6::from_int(2) * CycQ6::xi());
    }

    #[test]
    fn both_theta_choices_square_to_xi_squared() {
        let xi2 = CycQ6::xi_pow(2);
        assert_eq!(Theta::Xi.value().pow(2).unwrap(), xi2);
        assert_eq!(Theta::NegXi.value().pow(2).unwrap(), xi2);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(CycQ6::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn render_round_trip() {
        let x = CycQ6::new(
            BigRational::new(3.into(), 7.into()),
            BigRational::new((-11).into(), 5.into()),
        );
        assert_eq!(x.render(), "3/7 + -11/5*xi");
        let back: CycQ6 = x.render().parse().unwrap();
        assert_eq!(back, x);
        assert_eq!("xi".parse::<CycQ6>().unwrap(), CycQ6::xi());
        assert_eq!("-xi".parse::<CycQ6>().unwrap(), -CycQ6::xi());
        assert_eq!("1".parse::<CycQ6>().unwrap(), CycQ6::one());
        assert_eq!("-2/3".parse::<CycQ6>().unwrap(), CycQ6::from_ratio(-2, 3));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_cyc() -> impl Strategy<Value = CycQ6> {
            (-40i64..40, 1i64..12, -40i64..40, 1i64..12).prop_map(|(a, b, c, d)| {
                CycQ6::new(
                    BigRational::new(a.into(), b.into()),
                    BigRational::new(c.into(), d.into()),
                )
            })
        }

        proptest! {
            #[test]
            fn field_axioms(x in arb_cyc(), y in arb_cyc(), z in arb_cyc()) {
                prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
                prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
                prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
                prop_assert_eq!(&x * &y, &y * &x);
                if !x.is_zero() {
                    prop_assert_eq!(&x * &x.inv().unwrap(), CycQ6::one());
                }
            }

            #[test]
            fn parse_round_trip(x in arb_cyc()) {
                prop_assert_eq!(x.render().parse::<CycQ6>().unwrap(), x);
            }
        }
    }
}
