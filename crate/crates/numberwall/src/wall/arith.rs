//! Arithmetic contexts the wall engine is generic over.
//!
//! The recurrences themselves only need ring operations plus exact division,
//! but crossing a window uses the frame ratios P, Q, R, T, which over Z are
//! rationals in general. Each context therefore exposes two element kinds:
//! `Elem`, the grid entry type, and `Frac`, its fraction field, with an
//! embedding in one direction and a checked extraction in the other.
//!
//! `PrimeFieldCtx` keeps everything in canonical `u64` residues (a field is
//! its own fraction field). `IntegerCtx` stores `BigInt` entries and does
//! frame work in `BigRational`.

use crate::algebra::{addmod, invmod, mulmod, AlgebraError, Domain, DomainValue};
use crate::wall::WallError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) trait WallArith {
    type Elem: Clone + PartialEq + std::fmt::Debug;
    type Frac: Clone + PartialEq + std::fmt::Debug;

    fn domain(&self) -> Domain;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Exact quotient; `Err` on division by zero or (over Z) a remainder.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, WallError>;

    fn to_frac(&self, a: &Self::Elem) -> Self::Frac;
    fn frac_add(&self, a: &Self::Frac, b: &Self::Frac) -> Self::Frac;
    fn frac_sub(&self, a: &Self::Frac, b: &Self::Frac) -> Self::Frac;
    fn frac_mul(&self, a: &Self::Frac, b: &Self::Frac) -> Self::Frac;
    fn frac_div(&self, a: &Self::Frac, b: &Self::Frac) -> Result<Self::Frac, WallError>;
    fn frac_neg(&self, a: &Self::Frac) -> Self::Frac;
    /// Extraction back into the entry type; a genuine fraction here means the
    /// frame bookkeeping has gone wrong.
    fn frac_to_elem(&self, a: &Self::Frac) -> Result<Self::Elem, WallError>;

    fn to_value(&self, a: &Self::Elem) -> DomainValue;
    fn elem_of(&self, v: &DomainValue) -> Self::Elem;

    fn make_grid(&self, rows: Vec<Vec<Self::Elem>>) -> crate::wall::Grid;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeFieldCtx {
    pub p: u64,
}

impl WallArith for PrimeFieldCtx {
    type Elem = u64;
    type Frac = u64;

    fn domain(&self) -> Domain {
        Domain::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        addmod(*a, *b, self.p)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        addmod(*a, self.p - *b, self.p)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn exact_div(&self, a: &u64, b: &u64) -> Result<u64, WallError> {
        if *b == 0 {
            return Err(WallError::Algebra(AlgebraError::DivisionByZero));
        }
        Ok(mulmod(*a, invmod(*b, self.p).expect("nonzero"), self.p))
    }

    fn to_frac(&self, a: &u64) -> u64 {
        *a
    }
    fn frac_add(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, b)
    }
    fn frac_sub(&self, a: &u64, b: &u64) -> u64 {
        self.sub(a, b)
    }
    fn frac_mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul(a, b)
    }
    fn frac_div(&self, a: &u64, b: &u64) -> Result<u64, WallError> {
        self.exact_div(a, b)
    }
    fn frac_neg(&self, a: &u64) -> u64 {
        self.neg(a)
    }
    fn frac_to_elem(&self, a: &u64) -> Result<u64, WallError> {
        Ok(*a)
    }

    fn to_value(&self, a: &u64) -> DomainValue {
        self.domain().from_bigint(BigInt::from(*a))
    }
    fn elem_of(&self, v: &DomainValue) -> u64 {
        v.residue().expect("value belongs to this prime field")
    }

    fn make_grid(&self, rows: Vec<Vec<u64>>) -> crate::wall::Grid {
        crate::wall::Grid::Field { p: self.p, rows }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct IntegerCtx;

impl WallArith for IntegerCtx {
    type Elem = BigInt;
    type Frac = BigRational;

    fn domain(&self) -> Domain {
        Domain::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Result<BigInt, WallError> {
        if b.is_zero() {
            return Err(WallError::Algebra(AlgebraError::DivisionByZero));
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(WallError::Algebra(AlgebraError::InexactDivision(
                a.clone(),
                b.clone(),
            )))
        }
    }

    fn to_frac(&self, a: &BigInt) -> BigRational {
        BigRational::from_integer(a.clone())
    }
    fn frac_add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn frac_sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn frac_mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn frac_div(&self, a: &BigRational, b: &BigRational) -> Result<BigRational, WallError> {
        if b.is_zero() {
            return Err(WallError::Algebra(AlgebraError::DivisionByZero));
        }
        Ok(a / b)
    }
    fn frac_neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn frac_to_elem(&self, a: &BigRational) -> Result<BigInt, WallError> {
        if a.denom().is_one() || a.denom() == &-BigInt::one() {
            Ok(a.to_integer())
        } else {
            Err(WallError::Inconsistency(format!(
                "frame value {a} is not an integer"
            )))
        }
    }

    fn to_value(&self, a: &BigInt) -> DomainValue {
        Domain::Integers.from_bigint(a.clone())
    }
    fn elem_of(&self, v: &DomainValue) -> BigInt {
        v.to_bigint()
    }

    fn make_grid(&self, rows: Vec<Vec<BigInt>>) -> crate::wall::Grid {
        crate::wall::Grid::Int { rows }
    }
}

/// Sign helper: `(-1)^k` as an element.
pub(crate) fn signed_one<A: WallArith>(ctx: &A, k: i64) -> A::Elem {
    if k.rem_euclid(2) == 0 {
        ctx.one()
    } else {
        ctx.neg(&ctx.one())
    }
}

#[allow(unused)]
pub(crate) fn frac_signed_one<A: WallArith>(ctx: &A, k: i64) -> A::Frac {
    ctx.to_frac(&signed_one(ctx, k))
}
