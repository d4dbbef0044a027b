//! Canonical-class expansions for spaces of genus-0 stable maps to
//! projective space.
//!
//! `Pic` of the space of `n`-pointed degree-`d` stable maps to `P^r` is
//! spanned over `Q` by the incidence divisor `H` (maps meeting a fixed
//! codimension-2 linear subspace), the classes `L_p = ev_p*(hyperplane)` for
//! each marked point, and the boundary divisors `D_{i,j}` (reduced sum of the
//! divisors whose generic member splits off a sub-curve of degree `i`
//! carrying `j` of the markings). The canonical class has an exact expansion
//! in these generators, with three shapes depending on the signature:
//!
//! ```text
//! d = 0          K = sum_j ( j(n-j)/(n-1) - 2 ) D_{0,j}
//! d >= 1, n = 0  K = -(d+1)(r+1)/(2d) H + sum_i ( (r+1)(d-i)i/(2d) - 2 ) D_{i,0}
//! d >= 1, n >= 1 K = -((d+1)(r+1)d - 2n)/(2d^2) H - (2/d) sum_p L_p
//!                    + sum ( ((r+1)(d-i)di + 2d^2 j - 4dij + 2ni^2)/(2d^2) - 2 ) D_{i,j}
//! ```
//!
//! Boundary classes obey the identification `D_{i,j} = D_{d-i,n-j}`, and the
//! four stability-zero patterns (`i = 0` with fewer than two markings,
//! `i = d` with fewer than two on the other side) are the zero class. Every
//! expansion here is stored sparsely over canonical keys only; the
//! coefficient expressions are symmetric under the identification, so
//! assigning each class its value once is well-defined (and tested).

use crate::arith::{rat, Int, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("target dimension must be at least 2, got {0}")]
    TargetTooSmall(u32),
    #[error("degree-0 spaces need at least 3 marked points, got {0}")]
    TooFewMarkedPoints(u32),
}

/// The tuple `(n, r, d)` selecting a space of stable maps, validated on
/// construction: only targets of dimension at least 2 are treated, and a
/// degree-0 space exists only for `n >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuliSignature {
    n: u32,
    r: u32,
    d: u32,
}

impl ModuliSignature {
    pub fn new(n: u32, r: u32, d: u32) -> Result<Self, SignatureError> {
        if r < 2 {
            return Err(SignatureError::TargetTooSmall(r));
        }
        if d == 0 && n < 3 {
            return Err(SignatureError::TooFewMarkedPoints(n));
        }
        Ok(ModuliSignature { n, r, d })
    }

    pub fn marked_points(&self) -> u32 {
        self.n
    }

    pub fn target_dim(&self) -> u32 {
        self.r
    }

    pub fn degree(&self) -> u32 {
        self.d
    }
}

/// Canonical name of a boundary divisor class: the lexicographically smaller
/// of `(i, j)` and `(d-i, n-j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryClassKey {
    pub i: u32,
    pub j: u32,
}

impl BoundaryClassKey {
    /// Folds `(i, j)` onto its canonical representative. Requires
    /// `i <= d`, `j <= n`.
    pub fn canonical(i: u32, j: u32, n: u32, d: u32) -> Self {
        assert!(i <= d && j <= n, "({i}, {j}) out of range for n={n}, d={d}");
        let a = BoundaryClassKey { i, j };
        let b = BoundaryClassKey { i: d - i, j: n - j };
        a.min(b)
    }

    /// Whether the class is nonzero: maps with a degree-0 side carrying
    /// fewer than two special points sit in no stable-map space.
    pub fn is_valid(self, n: u32, d: u32) -> bool {
        let degree_zero_side = self.i == 0 && self.j <= 1;
        let degree_full_side = self.i == d && u64::from(self.j) + 1 >= u64::from(n);
        !(degree_zero_side || degree_full_side)
    }
}

impl fmt::Display for BoundaryClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{})", self.i, self.j)
    }
}

/// Attached caveats that do not change the coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionNote {
    /// `(n, r, d) = (0, 2, 2)` falls outside the stated coarse-moduli range
    /// of the unmarked expansion; the formula value is reported anyway.
    ExcludedConicCase,
    /// Degree 0: the space is a product of the pointed-curve space with the
    /// target, and the expansion covers only the first factor; the target
    /// contributes a further pullback summand outside this basis.
    DegreeZeroProductFactor,
}

impl fmt::Display for ExpansionNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpansionNote::ExcludedConicCase => write!(
                f,
                "signature (n=0, r=2, d=2) is excluded from the coarse-moduli \
                 statement; coefficients are the formula values"
            ),
            ExpansionNote::DegreeZeroProductFactor => write!(
                f,
                "degree 0: expansion covers the pointed-curve factor only; the \
                 canonical class of the product carries a further pullback from \
                 the target factor"
            ),
        }
    }
}

/// A canonical-class expansion `K = h H + l (L_1 + ... + L_n) + sum c_{i,j}
/// D_{i,j}` with exact coefficients, sparse over canonical nonzero classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalExpansion {
    pub n: u32,
    pub d: u32,
    pub h_coeff: Rat,
    /// Uniform coefficient of each `L_p`; zero when `n = 0` or `d = 0`.
    pub l_coeff: Rat,
    pub boundary: BTreeMap<BoundaryClassKey, Rat>,
    pub notes: Vec<ExpansionNote>,
}

impl CanonicalExpansion {
    /// Coefficient of `D_{i,j}`, folding through the identification; zero
    /// for absent, invalid, or out-of-range classes.
    pub fn coefficient(&self, i: u32, j: u32) -> Rat {
        if i > self.d || j > self.n {
            return Rat::zero();
        }
        let key = BoundaryClassKey::canonical(i, j, self.n, self.d);
        self.boundary.get(&key).cloned().unwrap_or_else(Rat::zero)
    }
}

/// All distinct nonzero boundary classes of the `(n, d)` space, by canonical
/// key in ascending order.
pub fn enumerate_boundary_classes(n: u32, d: u32) -> Vec<BoundaryClassKey> {
    assert!(d > 0 || n >= 3, "no space for n={n}, d=0");
    let mut out = Vec::new();
    for i in 0..=d {
        for j in 0..=n {
            let key = BoundaryClassKey { i, j };
            if key.is_valid(n, d) && key == BoundaryClassKey::canonical(i, j, n, d) {
                out.push(key);
            }
        }
    }
    out
}

fn int(x: u32) -> Int {
    Int::from(x)
}

/// Boundary coefficient `j(n-j)/(n-1) - 2` of the `n`-pointed-curve
/// expansion.
pub fn boundary_coefficient_m0n(n: u32, j: u32) -> Rat {
    Rat::new(int(j) * int(n - j), int(n - 1)) - rat(2, 1)
}

/// Boundary coefficient `(r+1)(d-i)i/(2d) - 2` of the unmarked expansion.
pub fn boundary_coefficient_unmarked(r: u32, d: u32, i: u32) -> Rat {
    Rat::new(int(r + 1) * int(d - i) * int(i), 2 * int(d)) - rat(2, 1)
}

/// Boundary coefficient
/// `((r+1)(d-i)di + 2d^2 j - 4dij + 2ni^2)/(2d^2) - 2`
/// of the marked expansion. Specializing `n = 0`, `j = 0` recovers the
/// unmarked expression.
pub fn boundary_coefficient_marked(n: u32, r: u32, d: u32, i: u32, j: u32) -> Rat {
    let twice_d2 = 2 * int(d) * int(d);
    let numerator = int(r + 1) * int(d - i) * int(d) * int(i) + &twice_d2 * int(j)
        - 4 * int(d) * int(i) * int(j)
        + 2 * int(n) * int(i) * int(i);
    Rat::new(numerator, twice_d2) - rat(2, 1)
}

fn collect_boundary(
    n: u32,
    d: u32,
    coefficient: impl Fn(BoundaryClassKey) -> Rat,
) -> BTreeMap<BoundaryClassKey, Rat> {
    enumerate_boundary_classes(n, d)
        .into_iter()
        .map(|key| (key, coefficient(key)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Expansion for the space of `n`-pointed genus-0 curves (no map): pure
/// boundary, classes `D_{0,j}` for `2 <= j <= n/2`.
pub fn canonical_class_m0n(n: u32) -> CanonicalExpansion {
    assert!(n >= 3, "pointed-curve space needs n >= 3, got {n}");
    CanonicalExpansion {
        n,
        d: 0,
        h_coeff: Rat::zero(),
        l_coeff: Rat::zero(),
        boundary: collect_boundary(n, 0, |key| boundary_coefficient_m0n(n, key.j)),
        notes: Vec::new(),
    }
}

/// Expansion for the unmarked space of degree-`d` maps to `P^r`.
pub fn canonical_class_unmarked(r: u32, d: u32) -> CanonicalExpansion {
    assert!(r >= 2, "target dimension must be at least 2, got {r}");
    assert!(d >= 1, "degree-0 unmarked expansion is undefined");
    let notes = if (r, d) == (2, 2) {
        vec![ExpansionNote::ExcludedConicCase]
    } else {
        Vec::new()
    };
    CanonicalExpansion {
        n: 0,
        d,
        h_coeff: -Rat::new(int(d + 1) * int(r + 1), 2 * int(d)),
        l_coeff: Rat::zero(),
        boundary: collect_boundary(0, d, |key| boundary_coefficient_unmarked(r, d, key.i)),
        notes,
    }
}

/// Expansion for the `n`-pointed (`n >= 1`) space of degree-`d` maps to
/// `P^r`.
pub fn canonical_class_marked(n: u32, r: u32, d: u32) -> CanonicalExpansion {
    assert!(n >= 1, "use the unmarked expansion for n = 0");
    assert!(r >= 2, "target dimension must be at least 2, got {r}");
    assert!(d >= 1, "use the pointed-curve expansion for d = 0");
    CanonicalExpansion {
        n,
        d,
        h_coeff: -Rat::new(
            int(d + 1) * int(r + 1) * int(d) - 2 * int(n),
            2 * int(d) * int(d),
        ),
        l_coeff: -Rat::new(int(2), int(d)),
        boundary: collect_boundary(n, d, |key| {
            boundary_coefficient_marked(n, r, d, key.i, key.j)
        }),
        notes: Vec::new(),
    }
}

/// Expansion for any validated signature, dispatching on its shape.
pub fn canonical_class(sig: &ModuliSignature) -> CanonicalExpansion {
    let (n, r, d) = (sig.marked_points(), sig.target_dim(), sig.degree());
    if d == 0 {
        let mut expansion = canonical_class_m0n(n);
        expansion.notes.push(ExpansionNote::DegreeZeroProductFactor);
        expansion
    } else if n == 0 {
        canonical_class_unmarked(r, d)
    } else {
        canonical_class_marked(n, r, d)
    }
}

/// Checks that the coefficient expression of the signature's expansion is
/// invariant under the identification `(i, j) -> (d-i, n-j)` over the whole
/// index grid, which is what makes per-class assignment well-defined.
pub fn coefficient_symmetry_check(sig: &ModuliSignature) -> bool {
    let (n, r, d) = (sig.marked_points(), sig.target_dim(), sig.degree());
    if d == 0 {
        return (0..=n)
            .all(|j| boundary_coefficient_m0n(n, j) == boundary_coefficient_m0n(n, n - j));
    }
    (0..=d).all(|i| {
        (0..=n).all(|j| {
            boundary_coefficient_marked(n, r, d, i, j)
                == boundary_coefficient_marked(n, r, d, d - i, n - j)
        })
    })
}
