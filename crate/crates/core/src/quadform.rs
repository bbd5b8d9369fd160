//! Quadratic spaces and the ambient forms `φ ⊥ ψ̃_m`.
//!
//! Conventions: `q(z) = ½ zᵀφz`, and `M` is orthogonal when `MᵀΦM = Φ`.
//! Hyperbolic planes are numbered from 1; so are basis indices in letters.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rings::{parse_ring, Elem, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSpace {
    gram: Matrix,
    gram_inv: Matrix,
    diagonal: bool,
}

impl QuadraticSpace {
    pub fn new(gram: Matrix) -> Result<QuadraticSpace> {
        if !gram.is_square() || gram.rows() == 0 {
            return Err(Error::DimensionMismatch("φ must be square of rank ≥ 1".into()));
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let gram_inv = gram.inverse()?;
        let r = gram.ring();
        let n = gram.rows();
        let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || r.is_zero(gram.get(i, j))));
        Ok(QuadraticSpace {
            gram,
            gram_inv,
            diagonal,
        })
    }

    pub fn diagonal(ring: &Ring, entries: &[Elem]) -> Result<QuadraticSpace> {
        let n = entries.len();
        QuadraticSpace::new(Matrix::from_fn(ring, n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                ring.zero()
            }
        }))
    }

    /// `ψ̃_r` on `n = 2r` coordinates.
    pub fn hyperbolic(ring: &Ring, r: usize) -> Result<QuadraticSpace> {
        QuadraticSpace::new(hyperbolic_gram(ring, r, Ordering::Interleaved))
    }

    pub fn ring(&self) -> &Ring {
        self.gram.ring()
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Matrix {
        &self.gram_inv
    }

    pub fn is_diagonal(&self) -> bool {
        self.diagonal
    }

    /// Whether `φ = ψ̃_{n/2}`.
    pub fn is_hyperbolic(&self) -> bool {
        let n = self.rank();
        n.is_multiple_of(2) && self.gram == hyperbolic_gram(self.ring(), n / 2, Ordering::Interleaved)
    }

    /// `d_j = (φ_jj)⁻¹`.
    pub fn d_vector(&self) -> Result<Vec<Elem>> {
        if !self.diagonal {
            return Err(Error::NotDiagonal);
        }
        (0..self.rank()).map(|j| self.ring().inv(self.gram.get(j, j))).collect()
    }

    /// `q(v) = ½ vᵀφv`.
    pub fn value(&self, v: &[Elem]) -> Result<Elem> {
        let b = self.bilinear(v, v)?;
        Ok(self.ring().mul(&self.ring().half()?, &b))
    }

    /// `B(v, w) = vᵀφw`.
    pub fn bilinear(&self, v: &[Elem], w: &[Elem]) -> Result<Elem> {
        let n = self.rank();
        if v.len() != n || w.len() != n {
            return Err(Error::DimensionMismatch(format!("vector length must be {n}")));
        }
        let r = self.ring();
        let mut acc = r.zero();
        for (i, vi) in v.iter().enumerate() {
            for (j, wj) in w.iter().enumerate() {
                let t = r.mul(&r.mul(vi, self.gram.get(i, j)), wj);
                acc = r.add(&acc, &t);
            }
        }
        Ok(acc)
    }

    /// The reflection `z ↦ z − (B(v,z)/q(v))·v`.
    pub fn reflection(&self, v: &[Elem]) -> Result<Matrix> {
        let r = self.ring();
        let qv = self.value(v)?;
        let inv = r.inv(&qv).map_err(|_| Error::IsotropicVector {
            value: r.format(&qv),
        })?;
        let n = self.rank();
        // row vector vᵀφ
        let vphi: Vec<Elem> = (0..n)
            .map(|j| r.sum(&(0..n).map(|i| r.mul(&v[i], self.gram.get(i, j))).collect::<Vec<_>>()))
            .collect();
        Ok(Matrix::from_fn(r, n, n, |i, j| {
            let t = r.mul(&r.mul(&v[i], &vphi[j]), &inv);
            let base = if i == j { r.one() } else { r.zero() };
            r.sub(&base, &t)
        }))
    }

    pub fn is_orthogonal(&self, m: &Matrix) -> bool {
        is_orthogonal(m, &self.gram)
    }

    /// `A⁻¹ = φ⁻¹Aᵀφ` for `A ∈ O(q)`.
    pub fn orthogonal_inverse(&self, a: &Matrix) -> Result<Matrix> {
        self.gram_inv.mul(&a.transpose())?.mul(&self.gram)
    }

    pub fn coerce(&self, target: &Ring) -> Result<QuadraticSpace> {
        QuadraticSpace::new(self.gram.coerce(target)?)
    }
}

/// `MᵀΦM = Φ`, exactly. Size or ring mismatches count as `false`.
pub fn is_orthogonal(m: &Matrix, gram: &Matrix) -> bool {
    match m.transpose().mul(gram).and_then(|t| t.mul(m)) {
        Ok(p) => p == *gram,
        Err(_) => false,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Ordering {
    /// Basis `Q, P_1..P_m, P*_1..P*_m`.
    Grouped,
    /// Basis `Q, P_1, P*_1, ..., P_m, P*_m`.
    #[default]
    Interleaved,
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ordering::Grouped => "grouped",
            Ordering::Interleaved => "interleaved",
        })
    }
}

impl FromStr for Ordering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ordering> {
        match s.to_ascii_lowercase().as_str() {
            "grouped" => Ok(Ordering::Grouped),
            "interleaved" => Ok(Ordering::Interleaved),
            _ => Err(Error::Parse(format!("unknown ordering `{s}`"))),
        }
    }
}

/// Gram matrix of `h^m`.
pub fn hyperbolic_gram(ring: &Ring, m: usize, ordering: Ordering) -> Matrix {
    let mut g = Matrix::zeros(ring, 2 * m, 2 * m);
    for i in 0..m {
        let (p, ps) = match ordering {
            Ordering::Grouped => (i, m + i),
            Ordering::Interleaved => (2 * i, 2 * i + 1),
        };
        g.set(p, ps, ring.one());
        g.set(ps, p, ring.one());
    }
    g
}

/// Position of each grouped basis vector in the interleaved basis (0-based).
pub fn shuffle_permutation(n: usize, m: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.extend((0..m).map(|i| n + 2 * i));
    perm.extend((0..m).map(|i| n + 2 * i + 1));
    perm
}

/// The permutation matrix `S` with `S·M_grouped·Sᵀ = M_interleaved`.
pub fn shuffle_matrix(ring: &Ring, n: usize, m: usize) -> Matrix {
    let perm = shuffle_permutation(n, m);
    let mut s = Matrix::zeros(ring, n + 2 * m, n + 2 * m);
    for (i, &p) in perm.iter().enumerate() {
        s.set(p, i, ring.one());
    }
    s
}

/// `q ⊥ h^m` in a chosen basis ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientForm {
    q: QuadraticSpace,
    m: usize,
    ordering: Ordering,
    gram: Matrix,
}

impl AmbientForm {
    pub fn new(q: QuadraticSpace, m: usize, ordering: Ordering) -> Result<AmbientForm> {
        if m == 0 {
            return Err(Error::PreconditionViolated("m must be at least 1".into()));
        }
        let gram = q.gram().block_diag(&hyperbolic_gram(q.ring(), m, ordering))?;
        Ok(AmbientForm {
            q,
            m,
            ordering,
            gram,
        })
    }

    /// `ψ̃_{n/2} ⊥ ψ̃_m`, interleaved.
    pub fn hyperbolic(ring: &Ring, n: usize, m: usize) -> Result<AmbientForm> {
        if !n.is_multiple_of(2) {
            return Err(Error::PreconditionViolated(format!("n = {n} must be even")));
        }
        AmbientForm::new(QuadraticSpace::hyperbolic(ring, n / 2)?, m, Ordering::Interleaved)
    }

    pub fn ring(&self) -> &Ring {
        self.q.ring()
    }

    pub fn q(&self) -> &QuadraticSpace {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.q.rank()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.n() + 2 * self.m
    }

    pub fn ordering(&self) -> Ordering {
        self.ordering
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn is_orthogonal(&self, m: &Matrix) -> bool {
        is_orthogonal(m, &self.gram)
    }

    fn check_plane(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.m {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.m,
            });
        }
        Ok(())
    }

    /// 0-based position of `P_i`.
    pub fn p_index(&self, i: usize) -> Result<usize> {
        self.check_plane(i)?;
        Ok(match self.ordering {
            Ordering::Grouped => self.n() + i - 1,
            Ordering::Interleaved => self.n() + 2 * i - 2,
        })
    }

    /// 0-based position of `P*_i`.
    pub fn pstar_index(&self, i: usize) -> Result<usize> {
        self.check_plane(i)?;
        Ok(match self.ordering {
            Ordering::Grouped => self.n() + self.m + i - 1,
            Ordering::Interleaved => self.n() + 2 * i - 1,
        })
    }

    /// For a 0-based hyperbolic index: `(plane, is_pstar)`.
    pub fn hyperbolic_coordinate(&self, idx: usize) -> Option<(usize, bool)> {
        let n = self.n();
        if idx < n || idx >= self.size() {
            return None;
        }
        let t = idx - n;
        Some(match self.ordering {
            Ordering::Grouped => (t % self.m + 1, t >= self.m),
            Ordering::Interleaved => (t / 2 + 1, t % 2 == 1),
        })
    }

    /// The pairing involution on 0-based indices. Hyperbolic indices pair
    /// `P_i ↔ P*_i`; indices of `Q` pair `2t ↔ 2t+1` and need `φ = ψ̃`.
    pub fn sigma(&self, idx: usize) -> Result<usize> {
        if idx >= self.size() {
            return Err(Error::IndexOutOfRange {
                index: idx + 1,
                max: self.size(),
            });
        }
        if let Some((i, star)) = self.hyperbolic_coordinate(idx) {
            return if star { self.p_index(i) } else { self.pstar_index(i) };
        }
        if !self.q.is_hyperbolic() {
            return Err(Error::NotHyperbolicForm);
        }
        Ok(idx ^ 1)
    }

    /// Same form, other basis ordering.
    pub fn reordered(&self, ordering: Ordering) -> AmbientForm {
        AmbientForm::new(self.q.clone(), self.m, ordering).expect("already validated")
    }

    /// Same Gram matrix over another ring.
    pub fn coerce(&self, target: &Ring) -> Result<AmbientForm> {
        AmbientForm::new(self.q.coerce(target)?, self.m, self.ordering)
    }

    /// The form over the smallest ring of the tower in which 2 is a unit.
    pub fn with_two_inverted(&self) -> Result<AmbientForm> {
        self.coerce(&self.ring().with_two_inverted())
    }

    /// `{n, m, ordering, ring, phi}`.
    pub fn header_json(&self) -> Value {
        json!({
            "n": self.n(),
            "m": self.m,
            "ordering": self.ordering.to_string(),
            "ring": self.ring().to_string(),
            "phi": self.q.gram().to_strings(),
        })
    }

    pub fn from_header_json(v: &Value) -> Result<AmbientForm> {
        let bad = |what: &str| Error::Parse(format!("context header: {what}"));
        let ring = parse_ring(v["ring"].as_str().ok_or_else(|| bad("missing `ring`"))?)?;
        let m = v["m"].as_u64().ok_or_else(|| bad("missing `m`"))? as usize;
        let ordering = match v.get("ordering") {
            Some(o) => o.as_str().ok_or_else(|| bad("`ordering` must be a string"))?.parse()?,
            None => Ordering::default(),
        };
        let phi = matrix_from_json(&ring, &v["phi"])?;
        if let Some(n) = v.get("n").and_then(Value::as_u64) {
            if n as usize != phi.rows() {
                return Err(bad("`n` disagrees with `phi`"));
            }
        }
        AmbientForm::new(QuadraticSpace::new(phi)?, m, ordering)
    }
}

/// Parses a JSON array of arrays of element literals (numbers are accepted).
pub fn matrix_from_json(ring: &Ring, v: &Value) -> Result<Matrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                .iter()
                .map(|e| match e {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) => Ok(n.to_string()),
                    _ => Err(Error::Parse(format!("bad matrix entry {e}"))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::parse(ring, &rows)
}
