//! Root-lattice vectors in the simple-root basis, generic over the integer type.
//!
//! Everything that must stay exact at unbounded index uses `BigInt`; the
//! fixed-width instantiations exist for dense scans where the quadratic form
//! fits in 64 bits and only rare hits need the big-integer path.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, ToBigInt};
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, Zero};

/// Integer types usable as lattice coordinates.
pub trait LatticeInt:
    Integer
    + Signed
    + Clone
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToBigInt
    + fmt::Display
    + fmt::Debug
{
}

impl<T> LatticeInt for T where
    T: Integer
        + Signed
        + Clone
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToBigInt
        + fmt::Display
        + fmt::Debug
{
}

/// `x·α₁ + y·α₂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector<T = BigInt> {
    pub x: T,
    pub y: T,
}

impl<T: LatticeInt> RootVector<T> {
    pub fn new(x: T, y: T) -> Self {
        RootVector { x, y }
    }

    pub fn zero() -> Self {
        RootVector { x: T::zero(), y: T::zero() }
    }

    pub fn alpha1() -> Self {
        RootVector { x: T::one(), y: T::zero() }
    }

    pub fn alpha2() -> Self {
        RootVector { x: T::zero(), y: T::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn to_big(&self) -> RootVector<BigInt> {
        RootVector {
            x: self.x.to_bigint().expect("integer converts to BigInt"),
            y: self.y.to_bigint().expect("integer converts to BigInt"),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        RootVector { x: self.x.clone() * k.clone(), y: self.y.clone() * k.clone() }
    }
}

impl RootVector<BigInt> {
    pub fn from_i64(x: i64, y: i64) -> Self {
        RootVector { x: BigInt::from(x), y: BigInt::from(y) }
    }

    /// Both coordinates as `i64`, if they fit.
    pub fn to_i64(&self) -> Option<(i64, i64)> {
        use num_traits::ToPrimitive;
        Some((self.x.to_i64()?, self.y.to_i64()?))
    }
}

impl<T: LatticeInt> Add for RootVector<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        RootVector { x: self.x + o.x, y: self.y + o.y }
    }
}

impl<'a, T: LatticeInt> Add<&'a RootVector<T>> for &'a RootVector<T> {
    type Output = RootVector<T>;
    fn add(self, o: Self) -> RootVector<T> {
        RootVector { x: self.x.clone() + o.x.clone(), y: self.y.clone() + o.y.clone() }
    }
}

impl<T: LatticeInt> Sub for RootVector<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        RootVector { x: self.x - o.x, y: self.y - o.y }
    }
}

impl<'a, T: LatticeInt> Sub<&'a RootVector<T>> for &'a RootVector<T> {
    type Output = RootVector<T>;
    fn sub(self, o: Self) -> RootVector<T> {
        RootVector { x: self.x.clone() - o.x.clone(), y: self.y.clone() - o.y.clone() }
    }
}

impl<T: LatticeInt> Neg for RootVector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        RootVector { x: -self.x, y: -self.y }
    }
}

impl<T: LatticeInt> Mul<T> for RootVector<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        RootVector { x: self.x * k.clone(), y: self.y * k }
    }
}

impl<T: fmt::Display> fmt::Display for RootVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Membership in a sublattice of ℤ² given by generators, via the
/// two-dimensional Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sublattice {
    // Rows (p, q) and (0, s) with p, s >= 0; p = 0 means the first row is absent.
    p: BigInt,
    q: BigInt,
    s: BigInt,
}

impl Sublattice {
    pub fn generated_by<'a, I>(gens: I) -> Self
    where
        I: IntoIterator<Item = &'a RootVector<BigInt>>,
    {
        let mut p = BigInt::zero();
        let mut q = BigInt::zero();
        let mut s = BigInt::zero();
        for g in gens {
            // Merge row (g.x, g.y) into (p, q) by extended Euclid on the first column.
            let (mut x, mut y) = (g.x.clone(), g.y.clone());
            if x.is_zero() {
                s = s.gcd(&y);
                continue;
            }
            if p.is_zero() {
                if x.is_negative() {
                    x = -x;
                    y = -y;
                }
                p = x;
                q = y;
            } else {
                let e = p.extended_gcd(&x);
                let (u, v) = (e.x, e.y);
                let new_q = &u * &q + &v * &y;
                // The combination killing the first column.
                let killed = (&x / &e.gcd) * &q - (&p / &e.gcd) * &y;
                p = e.gcd;
                q = new_q;
                s = s.gcd(&killed);
            }
            if !s.is_zero() && !p.is_zero() {
                q = q.mod_floor(&s);
            }
        }
        if !s.is_zero() && !p.is_zero() {
            q = q.mod_floor(&s);
        }
        Sublattice { p, q, s }
    }

    pub fn contains(&self, v: &RootVector<BigInt>) -> bool {
        let rest_y = if self.p.is_zero() {
            if !v.x.is_zero() {
                return false;
            }
            v.y.clone()
        } else {
            if !v.x.is_multiple_of(&self.p) {
                return false;
            }
            let k = &v.x / &self.p;
            &v.y - k * &self.q
        };
        if self.s.is_zero() {
            rest_y.is_zero()
        } else {
            rest_y.is_multiple_of(&self.s)
        }
    }

    /// Index in ℤ², or `None` when the sublattice has rank < 2.
    pub fn index(&self) -> Option<BigInt> {
        if self.p.is_zero() || self.s.is_zero() {
            None
        } else {
            Some(&self.p * &self.s)
        }
    }
}
