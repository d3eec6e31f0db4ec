//! Exact integer polynomial arithmetic: skew characteristic polynomials,
//! matching counts and polynomials, the identity test relating the two,
//! and grouping of switching classes by characteristic polynomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::{switching_class_representatives, Orientation, SkewMatrix};

/// Dense polynomial with arbitrary-precision integer coefficients.
/// `coeffs[k]` is the coefficient of `x^k`; the top coefficient is nonzero
/// (the zero polynomial has no coefficients).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Coefficients as decimal strings, index = power of x (for JSON).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for IntPoly {
    /// Descending powers, zero terms omitted, e.g. `x^7 + 8x^5 + 16x^3 + 8x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(xI - S)` by the Faddeev-LeVerrier
/// recurrence over exact rationals. Every division is exact and every
/// coefficient is asserted integral before conversion.
pub fn charpoly(s: &SkewMatrix) -> IntPoly {
    let n = s.n();
    let a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(BigInt::from(s.get(i, j))))
                .collect()
        })
        .collect();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    // am holds A * M_k; M_{k+1} = am + c_{n-k} I
    let mut am = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut mk = am;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        am = mat_mul(&a, &mk);
        let tr: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        c[n - k] = -tr / BigRational::from_integer(BigInt::from(k as i64));
    }
    let coeffs: Vec<BigInt> = c
        .into_iter()
        .map(|q| {
            assert!(q.is_integer(), "characteristic coefficient {q} not integral");
            q.to_integer()
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Number of matchings covering exactly k vertices, for k = 0..=n.
/// Deletion recursion on the lexicographically last edge, memoized on the
/// canonical graph value.
pub fn matching_counts(g: &Graph) -> Vec<BigInt> {
    fn rec(g: &Graph, memo: &mut HashMap<Graph, Vec<BigInt>>) -> Vec<BigInt> {
        if g.edge_count() == 0 {
            let mut counts = vec![BigInt::zero(); g.n() + 1];
            counts[0] = BigInt::one();
            return counts;
        }
        if let Some(hit) = memo.get(g) {
            return hit.clone();
        }
        let &(u, v) = g.edges().last().expect("nonempty");
        let skip = rec(&g.delete_edge(u, v).expect("edge"), memo);
        let take = rec(&g.delete_vertices(&[u, v]).expect("vertices"), memo);
        let mut counts = skip;
        for (k, t) in take.iter().enumerate() {
            counts[k + 2] += t;
        }
        memo.insert(g.clone(), counts.clone());
        counts
    }
    rec(g, &mut HashMap::new())
}

/// The matching polynomial: sum over even k of `(-1)^(k/2) m_k x^(n-k)`.
pub fn matching_polynomial(g: &Graph) -> IntPoly {
    let n = g.n();
    let counts = matching_counts(g);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, mk) in counts.iter().enumerate().step_by(2) {
        coeffs[n - k] = if (k / 2) % 2 == 0 { mk.clone() } else { -mk };
    }
    IntPoly::from_coeffs(coeffs)
}

/// True iff the skew characteristic polynomial of `o` coincides with the
/// sign-free matching transform of its host graph, i.e. the coefficient of
/// `x^(n-k)` equals `m_k` for every k. This is the integer-arithmetic form
/// of the identity `p_S(x) = (-i)^n m(G, ix)`.
pub fn holds_problem1_identity(o: &Orientation) -> bool {
    let g = o.graph();
    let n = g.n();
    let p = charpoly(&o.skew_matrix());
    let counts = matching_counts(g);
    (0..=n).all(|k| p.coeff(n - k) == counts[k])
}

/// A set of switching-class representatives sharing one characteristic
/// polynomial.
#[derive(Clone, Debug)]
pub struct CospectralClass {
    pub polynomial: IntPoly,
    pub orientations: Vec<Orientation>,
}

/// Groups the switching-class representatives of a connected graph by
/// exact characteristic polynomial. Switching preserves the spectrum, so
/// one class in the result means all orientations are cospectral.
/// Guarded at `m - n + 1 <= 20`.
pub fn cospectrality_classes(g: &Graph) -> Result<Vec<CospectralClass>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cycle_rank = g.edge_count() + 1 - g.n().max(1);
    if cycle_rank > 20 {
        return Err(Error::TooLarge(format!(
            "cycle rank {cycle_rank} exceeds the limit of 20"
        )));
    }
    let mut groups: BTreeMap<IntPoly, Vec<Orientation>> = BTreeMap::new();
    for o in switching_class_representatives(g)? {
        let p = charpoly(&o.skew_matrix());
        groups.entry(p).or_default().push(o);
    }
    Ok(groups
        .into_iter()
        .map(|(polynomial, orientations)| CospectralClass {
            polynomial,
            orientations,
        })
        .collect())
}
