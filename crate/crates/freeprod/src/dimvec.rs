//! Dimension vectors on the quiver, the stability parameter theta, the Euler
//! bilinear form, balancedness, and root classification.
//!
//! A dimension vector assigns a nonnegative integer to the sink (`d0`) and to
//! every source vertex (`d_ij`). It is *balanced* when every cluster
//! satisfies `sum_j w_ij * d_ij = d0`; balanced vectors are exactly the
//! dimension vectors of modules over the free product.

use num::{BigInt, BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraSpec;
use crate::cones::RayTuple;
use crate::error::{Error, Result};

/// Integer dimension vector. The entry grid must match the owning spec
/// shape-wise; operations check this and fail with `ShapeMismatch`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimensionVector {
    pub d0: u64,
    #[serde(rename = "clusters")]
    entries: Vec<Vec<u64>>,
}

impl DimensionVector {
    pub fn new(d0: u64, entries: Vec<Vec<u64>>) -> Self {
        DimensionVector { d0, entries }
    }

    /// The zero vector in the shape of `spec`.
    pub fn zeros(spec: &AlgebraSpec) -> Self {
        DimensionVector {
            d0: 0,
            entries: spec.clusters().iter().map(|c| vec![0; c.len()]).collect(),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.d0 == 0 && self.entries.iter().flatten().all(|&x| x == 0)
    }

    /// Checks the entry grid against the spec's cluster sizes.
    pub fn check_shape(&self, spec: &AlgebraSpec) -> Result<()> {
        if self.entries.len() != spec.num_clusters() {
            return Err(Error::ShapeMismatch(format!(
                "vector has {} clusters, spec has {}",
                self.entries.len(),
                spec.num_clusters()
            )));
        }
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != spec.cluster_size(i) {
                return Err(Error::ShapeMismatch(format!(
                    "cluster {} has {} entries, spec expects {}",
                    i + 1,
                    row.len(),
                    spec.cluster_size(i)
                )));
            }
        }
        Ok(())
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector {
            d0: big(self.d0 as i64),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|&x| big(x as i64)).collect())
                .collect(),
        }
    }

    /// Compact display like `(6; 2,2,1; 2,4)`.
    pub fn display(&self) -> String {
        let clusters: Vec<String> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("({}; {})", self.d0, clusters.join("; "))
    }
}

fn big(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Dimension vector with exact rational entries; the extremal rays of the
/// balanced cone live here (entries `1/w`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalVector {
    pub d0: BigRational,
    entries: Vec<Vec<BigRational>>,
}

impl RationalVector {
    pub fn new(d0: BigRational, entries: Vec<Vec<BigRational>>) -> Self {
        RationalVector { d0, entries }
    }

    pub fn zeros(spec: &AlgebraSpec) -> Self {
        RationalVector {
            d0: BigRational::zero(),
            entries: spec
                .clusters()
                .iter()
                .map(|c| vec![BigRational::zero(); c.len()])
                .collect(),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    pub fn check_shape(&self, spec: &AlgebraSpec) -> Result<()> {
        if self.entries.len() != spec.num_clusters()
            || self
                .entries
                .iter()
                .enumerate()
                .any(|(i, row)| row.len() != spec.cluster_size(i))
        {
            return Err(Error::ShapeMismatch(
                "rational vector does not match the spec".into(),
            ));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.d0.is_zero() && self.entries.iter().flatten().all(Zero::is_zero)
    }

    pub fn scale(&self, a: &BigRational) -> RationalVector {
        RationalVector {
            d0: &self.d0 * a,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|x| x * a).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        RationalVector {
            d0: &self.d0 + &other.d0,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect(),
        }
    }

    pub fn sub(&self, other: &RationalVector) -> RationalVector {
        RationalVector {
            d0: &self.d0 - &other.d0,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
                .collect(),
        }
    }
}

impl From<&DimensionVector> for RationalVector {
    fn from(d: &DimensionVector) -> Self {
        d.to_rational()
    }
}

/// The stability parameter: `-m` at the sink and `w_ij` at every source.
/// Derived from the spec on demand so it can never drift from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaParameter {
    theta0: i64,
    weights: Vec<Vec<u64>>,
}

impl ThetaParameter {
    pub fn of(spec: &AlgebraSpec) -> Self {
        ThetaParameter {
            theta0: -(spec.num_clusters() as i64),
            weights: spec.clusters().to_vec(),
        }
    }

    pub fn theta0(&self) -> i64 {
        self.theta0
    }

    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.weights[i][j] as i64
    }

    pub fn value(&self, d: &DimensionVector) -> i64 {
        let mut acc = self.theta0 as i128 * d.d0 as i128;
        for (row, ws) in d.entries().iter().zip(&self.weights) {
            for (&x, &w) in row.iter().zip(ws) {
                acc += w as i128 * x as i128;
            }
        }
        i128_to_i64(acc)
    }
}

fn i128_to_i64(x: i128) -> i64 {
    i64::try_from(x).expect("theta/euler value exceeds i64; inputs are far beyond desk scale")
}

/// True iff `sum_j w_ij * d_ij = d0` holds in every cluster.
pub fn is_balanced(spec: &AlgebraSpec, d: &DimensionVector) -> Result<bool> {
    d.check_shape(spec)?;
    Ok(spec.clusters().iter().zip(d.entries()).all(|(ws, row)| {
        ws.iter()
            .zip(row)
            .map(|(&w, &x)| w as u128 * x as u128)
            .sum::<u128>()
            == d.d0 as u128
    }))
}

/// `theta(d) = -m*d0 + sum w_ij*d_ij`; zero on every balanced vector.
pub fn theta_value(spec: &AlgebraSpec, d: &DimensionVector) -> Result<i64> {
    d.check_shape(spec)?;
    Ok(ThetaParameter::of(spec).value(d))
}

/// The Euler bilinear form of the quiver:
/// `<d, e> = sum_v d_v e_v - sum_{arrows u -> v} d_u e_v`,
/// with the `w_ij` parallel arrows each contributing.
pub fn euler_form(spec: &AlgebraSpec, d: &RationalVector, e: &RationalVector) -> Result<BigRational> {
    d.check_shape(spec)?;
    e.check_shape(spec)?;
    let mut acc = &d.d0 * &e.d0;
    for (i, j) in spec.positions() {
        acc += d.entry(i, j) * e.entry(i, j);
        let w = big(spec.weight(i, j) as i64);
        acc -= d.entry(i, j) * &e.d0 * w;
    }
    Ok(acc)
}

/// Euler form restricted to integer vectors; exact in machine integers.
pub fn euler_form_int(spec: &AlgebraSpec, d: &DimensionVector, e: &DimensionVector) -> Result<i64> {
    d.check_shape(spec)?;
    e.check_shape(spec)?;
    let mut acc = d.d0 as i128 * e.d0 as i128;
    for (i, j) in spec.positions() {
        acc += d.entry(i, j) as i128 * e.entry(i, j) as i128;
        acc -= spec.weight(i, j) as i128 * d.entry(i, j) as i128 * e.d0 as i128;
    }
    Ok(i128_to_i64(acc))
}

/// `<d, delta_u>` for balanced `d` by the closed form
/// `sum_i d_{i,u_i}/w_{i,u_i} - n(m-1)`; agrees exactly with
/// `euler_form(d, extremal_ray(u))`.
pub fn euler_with_ray(spec: &AlgebraSpec, d: &DimensionVector, u: &RayTuple) -> Result<BigRational> {
    if !is_balanced(spec, d)? {
        return Err(Error::NotBalanced(d.display()));
    }
    u.check(spec)?;
    let m = spec.num_clusters();
    let n = d.d0 as i64;
    let mut acc = big(-n * (m as i64 - 1));
    for (i, &j) in u.positions().iter().enumerate() {
        acc += BigRational::new(
            BigInt::from(d.entry(i, j)),
            BigInt::from(spec.weight(i, j)),
        );
    }
    Ok(acc)
}

/// Root class of a dimension vector under the Euler form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootClass {
    /// `<d,d> = 1`
    Real,
    /// `<d,d> = 0`
    Isotropic,
    /// `<d,d> < 0`
    Imaginary,
    /// `<d,d> > 1`; possible for vectors that are not Schur roots.
    None,
}

pub fn classify_root(spec: &AlgebraSpec, d: &DimensionVector) -> Result<RootClass> {
    let q = euler_form_int(spec, d, d)?;
    Ok(match q {
        1 => RootClass::Real,
        0 => RootClass::Isotropic,
        _ if q < 0 => RootClass::Imaginary,
        _ => RootClass::None,
    })
}

/// True iff all entries (including `d0`) share a common factor > 1.
pub fn is_divisible(d: &DimensionVector) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut g = d.d0;
    for &x in d.entries().iter().flatten() {
        g = num_integer::gcd(g, x);
    }
    Ok(g > 1)
}

/// Serialization helper: exact rationals as `"p/q"` strings.
pub fn rational_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses either a JSON integer or a `"p/q"` string.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let mk = |s: &str| -> Option<BigInt> { s.trim().parse().ok() };
    let parts: Vec<&str> = text.split('/').collect();
    let err = || Error::ShapeMismatch(format!("cannot parse rational: {text:?}"));
    match parts.as_slice() {
        [n] => Ok(BigRational::from_integer(mk(n).ok_or_else(err)?)),
        [n, q] => {
            let denom = mk(q).ok_or_else(err)?;
            if denom.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(mk(n).ok_or_else(err)?, denom))
        }
        _ => Err(err()),
    }
}

/// True iff every entry of the rational vector is a nonnegative integer.
pub fn is_integral(v: &RationalVector) -> bool {
    std::iter::once(&v.d0)
        .chain(v.entries().iter().flatten())
        .all(|x| x.is_integer() && !x.is_negative())
}
