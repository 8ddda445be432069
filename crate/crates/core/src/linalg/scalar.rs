use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LinalgError;

/// Field descriptor. Serialized as `"Q"` or `"F<p>"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Prime field `F_p`; rejects composite or tiny moduli.
    pub fn prime(p: u32) -> Result<Field, LinalgError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(LinalgError::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    /// Image of an integer in the field.
    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue { value: n.rem_euclid(p as i64) as u32, modulus: p },
        }
    }

    /// `num/den` as a field element.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar, LinalgError> {
        if den == 0 {
            return Err(LinalgError::DivisionByZero);
        }
        self.int(num).checked_div(&self.int(den))
    }

    /// Parses a serialized scalar: `"n"`, `"n/d"` over `Q`; `"r"` or `"r mod p"` over `F_p`.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::ParseScalar(s.to_string());
        let s = s.trim();
        match self {
            Field::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(LinalgError::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            Field::Prime(p) => {
                let body = match s.split_once("mod") {
                    Some((r, m)) => {
                        let m: u32 = m.trim().parse().map_err(|_| bad())?;
                        if m != p {
                            return Err(LinalgError::MixedFields);
                        }
                        r.trim()
                    }
                    None => s,
                };
                let r: i64 = body.parse().map_err(|_| bad())?;
                Ok(self.int(r))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let p = s.strip_prefix('F').and_then(|rest| rest.parse::<u32>().ok()).ok_or_else(|| LinalgError::ParseField(s.to_string()))?;
        Field::prime(p)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element, always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Ok(Scalar::Residue { value: ((*a as u64 + *b as u64) % *p as u64) as u32, modulus: *p })
            }
            _ => Err(LinalgError::MixedFields),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Ok(Scalar::Residue { value: ((*a as u64 * *b as u64) % *p as u64) as u32, modulus: *p })
            }
            _ => Err(LinalgError::MixedFields),
        }
    }

    pub fn checked_inv(&self) -> Result<Scalar, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => {
                // Fermat: a^(p-2)
                let p = *modulus as u64;
                let mut base = *value as u64;
                let mut exp = p - 2;
                let mut acc = 1u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Scalar::Residue { value: acc as u32, modulus: *modulus }
            }
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { value, modulus } => Scalar::Residue { value: (*modulus - *value) % *modulus, modulus: *modulus },
        }
    }

    /// In-place `self += other`; both operands must share a field.
    pub(crate) fn add_assign_ref(&mut self, other: &Scalar) {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                debug_assert_eq!(p, q);
                *a = ((*a as u64 + *b as u64) % *p as u64) as u32;
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    pub(crate) fn mul_ref(&self, other: &Scalar) -> Scalar {
        self.checked_mul(other).expect("mixed-field scalar arithmetic")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl Scalar {
    /// File form: always `num/den` for rationals, `r mod p` for residues.
    pub fn to_file_string(&self) -> String {
        match self {
            Scalar::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Scalar::Residue { .. } => self.to_string(),
        }
    }

    /// Rendering without the modulus, for tables and witnesses.
    pub fn short(&self) -> String {
        match self {
            Scalar::Residue { value, .. } => value.to_string(),
            Scalar::Rational(_) => self.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_addition() {
        let q = Field::Rational;
        let a = q.ratio(1, 2).unwrap();
        let b = q.ratio(1, 3).unwrap();
        assert_eq!(a.checked_add(&b).unwrap(), q.ratio(5, 6).unwrap());
    }

    #[test]
    fn prime_inverse() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.int(2).checked_inv().unwrap(), f5.int(3));
    }

    #[test]
    fn canonical_form() {
        let q = Field::Rational;
        let half = q.parse_scalar("2/4").unwrap();
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(q.parse_scalar("-3/-6").unwrap().to_string(), "1/2");
        assert_eq!(q.parse_scalar("6/3").unwrap().to_string(), "2");
    }

    #[test]
    fn errors() {
        let q = Field::Rational;
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(q.zero().checked_inv(), Err(LinalgError::DivisionByZero)));
        assert!(matches!(f5.zero().checked_inv(), Err(LinalgError::DivisionByZero)));
        assert!(matches!(q.one().checked_add(&f5.one()), Err(LinalgError::MixedFields)));
        assert!(matches!(Field::prime(6), Err(LinalgError::NotPrime(6))));
        assert!(matches!(q.parse_scalar("1/0"), Err(LinalgError::DivisionByZero)));
    }

    #[test]
    fn field_descriptor_round_trip() {
        for s in ["Q", "F2", "F5", "F101"] {
            assert_eq!(s.parse::<Field>().unwrap().to_string(), s);
        }
        assert!("F4".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
    }

    #[test]
    fn residue_parsing() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.parse_scalar("3 mod 5").unwrap(), f5.int(3));
        assert_eq!(f5.parse_scalar("-1").unwrap(), f5.int(4));
        assert!(f5.parse_scalar("3 mod 7").is_err());
        assert_eq!(f5.int(3).to_string(), "3 mod 5");
    }
}
