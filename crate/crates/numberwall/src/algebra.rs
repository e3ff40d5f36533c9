//! Exact arithmetic over the two coefficient domains a wall can live in:
//! arbitrary-precision integers and prime fields Z/pZ.
//!
//! Every wall entry is a [`DomainValue`]: an exact integer carrying its
//! domain tag. Prime-field values are kept in canonical range `0..p`, and
//! mixing values from different domains is rejected rather than coerced.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("operands belong to different domains ({0} vs {1})")]
    WrongDomain(Domain, Domain),
    #[error("operation requires a prime-field value, got {0}")]
    NotAField(Domain),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{1} does not divide {0} exactly")]
    InexactDivision(BigInt, BigInt),
}

/// A coefficient domain: the ring of integers, or Z/pZ for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Integers,
    PrimeField(u64),
}

impl Domain {
    /// Builds a prime-field domain, rejecting composite or unit moduli.
    pub fn prime_field(p: u64) -> Result<Domain, AlgebraError> {
        if is_prime(p) {
            Ok(Domain::PrimeField(p))
        } else {
            Err(AlgebraError::CompositeModulus(p))
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Domain::Integers => None,
            Domain::PrimeField(p) => Some(*p),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Domain::PrimeField(_))
    }

    /// Zero in this domain.
    pub fn zero(&self) -> DomainValue {
        DomainValue {
            domain: *self,
            repr: match self {
                Domain::Integers => Repr::Int(BigInt::zero()),
                Domain::PrimeField(_) => Repr::Mod(0),
            },
        }
    }

    /// One in this domain.
    pub fn one(&self) -> DomainValue {
        self.from_i64(1)
    }

    /// Reduces an ordinary integer into this domain.
    pub fn from_i64(&self, v: i64) -> DomainValue {
        match self {
            Domain::Integers => DomainValue {
                domain: *self,
                repr: Repr::Int(BigInt::from(v)),
            },
            Domain::PrimeField(p) => DomainValue {
                domain: *self,
                repr: Repr::Mod(v.rem_euclid(*p as i64) as u64),
            },
        }
    }

    /// Reduces an arbitrary-precision integer into this domain.
    pub fn from_bigint(&self, v: BigInt) -> DomainValue {
        match self {
            Domain::Integers => DomainValue {
                domain: *self,
                repr: Repr::Int(v),
            },
            Domain::PrimeField(p) => {
                let m = BigInt::from(*p);
                let r = v.mod_floor(&m);
                DomainValue {
                    domain: *self,
                    repr: Repr::Mod(u64::try_from(r).expect("reduced residue fits u64")),
                }
            }
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integers => write!(f, "Z"),
            Domain::PrimeField(p) => write!(f, "Z/{p}"),
        }
    }
}

/// Deterministic trial division; moduli in practice are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Int(BigInt),
    /// Canonical residue in `0..p`.
    Mod(u64),
}

/// An exact element of Z or Z/pZ, tagged with its domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DomainValue {
    domain: Domain,
    repr: Repr,
}

impl DomainValue {
    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Int(v) => v.is_zero(),
            Repr::Mod(v) => *v == 0,
        }
    }

    /// Canonical integer representative: the value itself over Z, the
    /// residue in `0..p` over Z/pZ.
    pub fn to_bigint(&self) -> BigInt {
        match &self.repr {
            Repr::Int(v) => v.clone(),
            Repr::Mod(v) => BigInt::from(*v),
        }
    }

    /// Canonical residue for prime-field values.
    pub fn residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Mod(v) => Some(*v),
            Repr::Int(_) => None,
        }
    }

    fn check_same_domain(&self, other: &DomainValue) -> Result<(), AlgebraError> {
        if self.domain == other.domain {
            Ok(())
        } else {
            Err(AlgebraError::WrongDomain(self.domain, other.domain))
        }
    }

    pub fn checked_add(&self, other: &DomainValue) -> Result<DomainValue, AlgebraError> {
        self.check_same_domain(other)?;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Int(a), Repr::Int(b)) => DomainValue {
                domain: self.domain,
                repr: Repr::Int(a + b),
            },
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.domain.modulus().unwrap();
                DomainValue {
                    domain: self.domain,
                    repr: Repr::Mod(addmod(*a, *b, p)),
                }
            }
            _ => unreachable!("repr always matches domain"),
        })
    }

    pub fn checked_sub(&self, other: &DomainValue) -> Result<DomainValue, AlgebraError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &DomainValue) -> Result<DomainValue, AlgebraError> {
        self.check_same_domain(other)?;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Int(a), Repr::Int(b)) => DomainValue {
                domain: self.domain,
                repr: Repr::Int(a * b),
            },
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.domain.modulus().unwrap();
                DomainValue {
                    domain: self.domain,
                    repr: Repr::Mod(mulmod(*a, *b, p)),
                }
            }
            _ => unreachable!("repr always matches domain"),
        })
    }

    pub fn neg(&self) -> DomainValue {
        DomainValue {
            domain: self.domain,
            repr: match &self.repr {
                Repr::Int(v) => Repr::Int(-v),
                Repr::Mod(v) => {
                    let p = self.domain.modulus().unwrap();
                    Repr::Mod(if *v == 0 { 0 } else { p - *v })
                }
            },
        }
    }
}

impl fmt::Display for DomainValue {
    /// Prints the canonical integer representative.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bigint())
    }
}

pub(crate) fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse of `a` mod `p` by the extended Euclidean algorithm.
pub(crate) fn invmod(a: u64, p: u64) -> Result<u64, AlgebraError> {
    if a == 0 {
        return Err(AlgebraError::ZeroInverse);
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus is prime, nonzero elements are units");
    Ok(t0.rem_euclid(p as i128) as u64)
}

/// Multiplicative inverse in Z/pZ.
pub fn field_inverse(a: &DomainValue) -> Result<DomainValue, AlgebraError> {
    match (a.domain, &a.repr) {
        (Domain::Integers, _) => Err(AlgebraError::NotAField(Domain::Integers)),
        (Domain::PrimeField(p), Repr::Mod(v)) => Ok(DomainValue {
            domain: a.domain,
            repr: Repr::Mod(invmod(*v, p)?),
        }),
        _ => unreachable!("repr always matches domain"),
    }
}

/// Exact division `a / b`. Over Z/pZ this is multiplication by the inverse;
/// over Z the quotient must leave no remainder — a nonzero remainder means
/// the caller's wall data is corrupt and the computation must abort.
pub fn exact_divide(a: &DomainValue, b: &DomainValue) -> Result<DomainValue, AlgebraError> {
    a.check_same_domain(b)?;
    if b.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    match (&a.repr, &b.repr) {
        (Repr::Int(x), Repr::Int(y)) => {
            let (q, r) = x.div_rem(y);
            if r.is_zero() {
                Ok(DomainValue {
                    domain: a.domain,
                    repr: Repr::Int(q),
                })
            } else {
                Err(AlgebraError::InexactDivision(x.clone(), y.clone()))
            }
        }
        (Repr::Mod(x), Repr::Mod(y)) => {
            let p = a.domain.modulus().unwrap();
            Ok(DomainValue {
                domain: a.domain,
                repr: Repr::Mod(mulmod(*x, invmod(*y, p)?, p)),
            })
        }
        _ => unreachable!("repr always matches domain"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(p: u64) -> Domain {
        Domain::prime_field(p).unwrap()
    }

    #[test]
    fn prime_validation() {
        assert!(Domain::prime_field(2).is_ok());
        assert!(Domain::prime_field(83).is_ok());
        assert_eq!(
            Domain::prime_field(6),
            Err(AlgebraError::CompositeModulus(6))
        );
        assert_eq!(
            Domain::prime_field(1),
            Err(AlgebraError::CompositeModulus(1))
        );
    }

    #[test]
    fn canonical_reduction() {
        let d = zp(5);
        assert_eq!(d.from_i64(-3).residue(), Some(2));
        assert_eq!(d.from_i64(12).residue(), Some(2));
        // reducing a reduced value is the identity
        let v = d.from_i64(4);
        assert_eq!(d.from_bigint(v.to_bigint()), v);
    }

    #[test]
    fn field_inverse_examples() {
        assert_eq!(
            field_inverse(&zp(3).from_i64(2)).unwrap(),
            zp(3).from_i64(2)
        );
        assert_eq!(
            field_inverse(&zp(5).from_i64(2)).unwrap(),
            zp(5).from_i64(3)
        );
        assert_eq!(
            field_inverse(&zp(7).from_i64(0)),
            Err(AlgebraError::ZeroInverse)
        );
        assert_eq!(
            field_inverse(&Domain::Integers.from_i64(1)),
            Err(AlgebraError::NotAField(Domain::Integers))
        );
    }

    #[test]
    fn field_inverse_involution() {
        for p in [2u64, 3, 5, 7, 83] {
            let d = zp(p);
            for a in 1..p.min(100) {
                let v = d.from_i64(a as i64);
                let inv = field_inverse(&v).unwrap();
                assert_eq!(field_inverse(&inv).unwrap(), v);
                assert_eq!(v.checked_mul(&inv).unwrap(), d.one());
            }
        }
    }

    #[test]
    fn exact_divide_examples() {
        let z = Domain::Integers;
        assert_eq!(
            exact_divide(&z.from_i64(-6), &z.from_i64(3)).unwrap(),
            z.from_i64(-2)
        );
        let f5 = zp(5);
        assert_eq!(
            exact_divide(&f5.from_i64(4), &f5.from_i64(3)).unwrap(),
            f5.from_i64(3)
        );
        assert!(matches!(
            exact_divide(&z.from_i64(5), &z.from_i64(3)),
            Err(AlgebraError::InexactDivision(_, _))
        ));
        assert_eq!(
            exact_divide(&z.from_i64(5), &z.from_i64(0)),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn mixed_domains_rejected() {
        let a = Domain::Integers.from_i64(1);
        let b = zp(3).from_i64(1);
        assert!(matches!(
            a.checked_add(&b),
            Err(AlgebraError::WrongDomain(_, _))
        ));
        assert!(matches!(
            exact_divide(&a, &b),
            Err(AlgebraError::WrongDomain(_, _))
        ));
    }

    #[test]
    fn divide_undoes_multiply() {
        let z = Domain::Integers;
        for a in -20i64..20 {
            for b in -20i64..20 {
                if b == 0 {
                    continue;
                }
                let prod = z.from_i64(a).checked_mul(&z.from_i64(b)).unwrap();
                assert_eq!(
                    exact_divide(&prod, &z.from_i64(b)).unwrap(),
                    z.from_i64(a)
                );
            }
        }
        let f7 = zp(7);
        for a in 0..7i64 {
            for b in 1..7i64 {
                let prod = f7.from_i64(a).checked_mul(&f7.from_i64(b)).unwrap();
                assert_eq!(
                    exact_divide(&prod, &f7.from_i64(b)).unwrap(),
                    f7.from_i64(a)
                );
            }
        }
    }
}
