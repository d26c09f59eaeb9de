use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// ab = 4
    Affine,
    /// ab > 4
    Hyperbolic,
}

/// The generalized Cartan matrix `H(a,b) = [[2, -b], [-a, 2]]` with `ab >= 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanData {
    a: i64,
    b: i64,
    kind: Kind,
}

impl CartanData {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a < 1 || b < 1 || a.checked_mul(b).map_or(true, |ab| ab < 4) {
            return Err(Error::InvalidCartan { a, b });
        }
        // Keep ab and (ab)^2 comfortably inside i64 for the scaled form.
        if a > (1 << 20) || b > (1 << 20) {
            return Err(Error::InvalidArgument(format!("H({a},{b}): entries above 2^20 are not supported")));
        }
        let kind = if a * b == 4 { Kind::Affine } else { Kind::Hyperbolic };
        Ok(CartanData { a, b, kind })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn ab(&self) -> i64 {
        self.a * self.b
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_affine(&self) -> bool {
        self.kind == Kind::Affine
    }

    pub fn is_symmetric(&self) -> bool {
        self.a == self.b
    }

    /// `H(b,a)`, the image under swapping the simple roots.
    pub fn mirror(&self) -> CartanData {
        CartanData { a: self.b, b: self.a, kind: self.kind }
    }

    /// `[[2, -b], [-a, 2]]`, row i giving `⟨α_j, α_i^∨⟩` in column j.
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        [[2, -self.b], [-self.a, 2]]
    }

    /// `b·B = [[2a, -ab], [-ab, 2b]]`, the integer-scaled symmetrization.
    pub fn scaled_form(&self) -> [[i64; 2]; 2] {
        [[2 * self.a, -self.ab()], [-self.ab(), 2 * self.b]]
    }

    /// The symmetrization `B = [[2a/b, -a], [-a, 2]]` with `|α₂|² = 2`.
    pub fn symmetrization(&self) -> [[BigRational; 2]; 2] {
        let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        [[r(2 * self.a, self.b), r(-self.a, 1)], [r(-self.a, 1), r(2, 1)]]
    }

    /// `ab - 2`, the recurrence coefficient.
    pub fn trace(&self) -> i64 {
        self.ab() - 2
    }
}

impl fmt::Display for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{})", self.a, self.b)
    }
}
