//! The base curve — the affine or projective line over the rationals — with
//! rational functions kept in factored form, valuations, Q-divisors, floors,
//! and spaces of global sections.
//!
//! Rational functions are stored as `unit · ∏ (z − a)^{e_a}` with rational
//! roots `a` and integer exponents. Valuations are then exact lookups: the
//! order at a finite point is its exponent, and the order at infinity is
//! minus the total degree `Σ e_a`. Products, inverses, and powers never
//! expand anything.

use crate::error::{DomainError, Result};
use crate::{Int, Rat};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Which line the calculus runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveKind {
    /// The affine line with coordinate ring `k[z]`.
    Affine,
    /// The projective line.
    Projective,
}

/// A closed point of the curve: a rational number, or the point at infinity
/// (projective line only).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CurvePoint {
    /// The point `z = a`.
    Finite(Rat),
    /// The point at infinity.
    Infinity,
}

impl CurvePoint {
    /// The origin `z = 0`.
    pub fn origin() -> Self {
        CurvePoint::Finite(Rat::zero())
    }

    /// The point `z = a` for an integer `a`.
    pub fn integer(a: i64) -> Self {
        CurvePoint::Finite(Rat::from(Int::from(a)))
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Finite(a) => write!(f, "{a}"),
            CurvePoint::Infinity => write!(f, "inf"),
        }
    }
}

/// A nonzero rational function in factored form `unit · ∏ (z − a)^{e_a}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    unit: Rat,
    factors: BTreeMap<Rat, i64>,
}

impl RationalFunction {
    /// Build from a unit and (root, exponent) pairs; repeated roots are
    /// merged, zero exponents dropped.
    pub fn new(unit: Rat, factors: impl IntoIterator<Item = (Rat, i64)>) -> Result<Self> {
        if unit.is_zero() {
            return Err(DomainError::InvalidInput(
                "the zero function has no factored form".into(),
            ));
        }
        let mut map: BTreeMap<Rat, i64> = BTreeMap::new();
        for (root, e) in factors {
            let entry = map.entry(root).or_insert(0);
            *entry += e;
        }
        map.retain(|_, e| *e != 0);
        Ok(RationalFunction { unit, factors: map })
    }

    /// The constant function `1`.
    pub fn one() -> Self {
        RationalFunction {
            unit: Rat::one(),
            factors: BTreeMap::new(),
        }
    }

    /// A nonzero constant.
    pub fn constant(c: Rat) -> Result<Self> {
        Self::new(c, [])
    }

    /// The coordinate function `z`.
    pub fn coordinate() -> Self {
        Self::linear(Rat::zero())
    }

    /// The linear function `z − a`.
    pub fn linear(root: Rat) -> Self {
        let mut factors = BTreeMap::new();
        factors.insert(root, 1);
        RationalFunction {
            unit: Rat::one(),
            factors,
        }
    }

    /// The leading unit.
    pub fn unit(&self) -> &Rat {
        &self.unit
    }

    /// The factored part: root → exponent, exponents nonzero.
    pub fn factors(&self) -> &BTreeMap<Rat, i64> {
        &self.factors
    }

    /// Product of two functions.
    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (root, e) in &other.factors {
            let entry = factors.entry(root.clone()).or_insert(0);
            *entry += e;
        }
        factors.retain(|_, e| *e != 0);
        RationalFunction {
            unit: &self.unit * &other.unit,
            factors,
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Self {
        RationalFunction {
            unit: self.unit.recip(),
            factors: self.factors.iter().map(|(r, e)| (r.clone(), -e)).collect(),
        }
    }

    /// Integer power (negative exponents via the inverse).
    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let k = e.unsigned_abs();
        let mut unit = Rat::one();
        for _ in 0..k {
            unit *= &base.unit;
        }
        let factors = base
            .factors
            .iter()
            .map(|(r, ex)| (r.clone(), ex * k as i64))
            .collect();
        RationalFunction { unit, factors }
    }

    /// The vanishing order at a point: the exponent of `(z − a)` at a finite
    /// point, and `−Σ e_a` at infinity.
    pub fn order_at(&self, z: &CurvePoint) -> i64 {
        match z {
            CurvePoint::Finite(a) => self.factors.get(a).copied().unwrap_or(0),
            CurvePoint::Infinity => -self.total_exponent(),
        }
    }

    /// The sum of all exponents (the degree of the function as a map).
    pub fn total_exponent(&self) -> i64 {
        self.factors.values().sum()
    }

    /// The divisor of zeros and poles. On the projective line this includes
    /// the order at infinity, so its degree is zero.
    pub fn principal_divisor(&self, kind: CurveKind) -> QDivisor {
        let mut coeffs: Vec<(CurvePoint, Rat)> = self
            .factors
            .iter()
            .map(|(root, e)| (CurvePoint::Finite(root.clone()), Rat::from(Int::from(*e))))
            .collect();
        if kind == CurveKind::Projective {
            coeffs.push((
                CurvePoint::Infinity,
                Rat::from(Int::from(-self.total_exponent())),
            ));
        }
        QDivisor::new(kind, coeffs).expect("factored functions produce valid divisors")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(format!("{}", self.unit));
        }
        for (root, e) in &self.factors {
            let base = if root.is_zero() {
                "z".to_string()
            } else if root.is_negative() {
                format!("(z+{})", -root.clone())
            } else {
                format!("(z-{root})")
            };
            if *e == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{e}"));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// A divisor with rational coefficients and finite support; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QDivisor {
    kind: CurveKind,
    coefficients: BTreeMap<CurvePoint, Rat>,
}

impl QDivisor {
    /// Build from (point, coefficient) pairs; duplicates are summed, zeros
    /// dropped. The point at infinity is rejected on the affine line.
    pub fn new(kind: CurveKind, coeffs: impl IntoIterator<Item = (CurvePoint, Rat)>) -> Result<Self> {
        let mut map: BTreeMap<CurvePoint, Rat> = BTreeMap::new();
        for (z, c) in coeffs {
            if kind == CurveKind::Affine && z == CurvePoint::Infinity {
                return Err(DomainError::InfinityOnAffineLine);
            }
            let entry = map.entry(z).or_insert_with(Rat::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(QDivisor {
            kind,
            coefficients: map,
        })
    }

    /// The zero divisor.
    pub fn zero(kind: CurveKind) -> Self {
        QDivisor {
            kind,
            coefficients: BTreeMap::new(),
        }
    }

    /// Which line the divisor lives on.
    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    /// The coefficient at a point (zero when absent).
    pub fn coefficient(&self, z: &CurvePoint) -> Rat {
        self.coefficients.get(z).cloned().unwrap_or_else(Rat::zero)
    }

    /// The points with nonzero coefficient, in canonical order.
    pub fn support(&self) -> Vec<&CurvePoint> {
        self.coefficients.keys().collect()
    }

    /// Iterate over (point, coefficient) pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&CurvePoint, &Rat)> {
        self.coefficients.iter()
    }

    /// Pointwise sum; both divisors must live on the same line.
    pub fn add(&self, other: &QDivisor) -> QDivisor {
        assert_eq!(self.kind, other.kind, "divisors on different curves");
        let mut map = self.coefficients.clone();
        for (z, c) in &other.coefficients {
            let entry = map.entry(z.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        QDivisor {
            kind: self.kind,
            coefficients: map,
        }
    }

    /// Pointwise negation.
    pub fn neg(&self) -> QDivisor {
        QDivisor {
            kind: self.kind,
            coefficients: self
                .coefficients
                .iter()
                .map(|(z, c)| (z.clone(), -c.clone()))
                .collect(),
        }
    }

    /// Pointwise difference.
    pub fn sub(&self, other: &QDivisor) -> QDivisor {
        self.add(&other.neg())
    }

    /// Scale every coefficient.
    pub fn scale(&self, factor: &Rat) -> QDivisor {
        if factor.is_zero() {
            return QDivisor::zero(self.kind);
        }
        QDivisor {
            kind: self.kind,
            coefficients: self
                .coefficients
                .iter()
                .map(|(z, c)| (z.clone(), c * factor))
                .collect(),
        }
    }

    /// Componentwise floor.
    pub fn floor(&self) -> QDivisor {
        let mut map: BTreeMap<CurvePoint, Rat> = BTreeMap::new();
        for (z, c) in &self.coefficients {
            let f = Rat::from(c.floor().to_integer());
            if !f.is_zero() {
                map.insert(z.clone(), f);
            }
        }
        QDivisor {
            kind: self.kind,
            coefficients: map,
        }
    }

    /// Pointwise minimum over the union of supports.
    pub fn pointwise_min(&self, other: &QDivisor) -> QDivisor {
        assert_eq!(self.kind, other.kind, "divisors on different curves");
        let mut map: BTreeMap<CurvePoint, Rat> = BTreeMap::new();
        for z in self.coefficients.keys().chain(other.coefficients.keys()) {
            let m = self.coefficient(z).min(other.coefficient(z));
            map.insert(z.clone(), m);
        }
        map.retain(|_, c| !c.is_zero());
        QDivisor {
            kind: self.kind,
            coefficients: map,
        }
    }

    /// True iff every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coefficients.values().all(|c| c.denom().is_one())
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_effective(&self) -> bool {
        self.coefficients.values().all(|c| !c.is_negative())
    }

    /// The degree `Σ coefficients` — defined on the projective line only.
    pub fn degree(&self) -> Result<Rat> {
        if self.kind == CurveKind::Affine {
            return Err(DomainError::DegreeOnAffineCurve);
        }
        Ok(self.coefficients.values().sum())
    }
}

/// The space of global sections `H⁰(C, O(D))` of an integral divisor.
///
/// On the affine line this is the free rank-one `k[z]`-module on the stored
/// generator; on the projective line it is the finite-dimensional span of
/// the stored basis (empty exactly when `deg D < 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionSpace {
    kind: CurveKind,
    divisor: QDivisor,
    basis: Vec<RationalFunction>,
}

impl SectionSpace {
    /// Compute the section space of an integral divisor.
    pub fn global_sections(d: &QDivisor) -> Result<SectionSpace> {
        if !d.is_integral() {
            return Err(DomainError::InvalidInput(format!(
                "global sections need an integral divisor, got coefficients {:?}",
                d.coefficients.values().collect::<Vec<_>>()
            )));
        }
        // Minimal-order generator at the finite points: ∏ (z − a)^{−e_a}.
        let finite_factors: Vec<(Rat, i64)> = d
            .coefficients
            .iter()
            .filter_map(|(z, c)| match z {
                CurvePoint::Finite(a) => {
                    let e = i64::try_from(c.numer().clone()).expect("small divisor coefficient");
                    Some((a.clone(), -e))
                }
                CurvePoint::Infinity => None,
            })
            .collect();
        let generator = RationalFunction::new(Rat::one(), finite_factors)?;
        let basis = match d.kind {
            CurveKind::Affine => vec![generator],
            CurveKind::Projective => {
                let deg = d.degree()?;
                if deg.is_negative() {
                    Vec::new()
                } else {
                    let top = i64::try_from(deg.numer().clone()).expect("small degree");
                    let z = RationalFunction::coordinate();
                    (0..=top).map(|j| generator.mul(&z.pow(j))).collect()
                }
            }
        };
        let space = SectionSpace {
            kind: d.kind,
            divisor: d.clone(),
            basis,
        };
        debug_assert!(space
            .basis
            .iter()
            .all(|g| g.principal_divisor(d.kind).add(d).is_effective()));
        Ok(space)
    }

    /// Which line the sections live on.
    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    /// The underlying divisor.
    pub fn divisor(&self) -> &QDivisor {
        &self.divisor
    }

    /// Affine: the single module generator. Projective: a vector-space basis.
    pub fn basis(&self) -> &[RationalFunction] {
        &self.basis
    }

    /// `k`-dimension on the projective line; `None` on the affine line
    /// (infinite-dimensional over `k`, free of rank one over `k[z]`).
    pub fn dimension(&self) -> Option<usize> {
        match self.kind {
            CurveKind::Affine => None,
            CurveKind::Projective => Some(self.basis.len()),
        }
    }

    /// True iff the space is `{0}` (projective line with negative degree).
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Exact membership: `f` is a section iff `div(f) + D ≥ 0`.
    pub fn contains(&self, f: &RationalFunction) -> bool {
        f.principal_divisor(self.kind).add(&self.divisor).is_effective()
    }
}
