//! Constructors for the concrete algebras the engine is tested against:
//! hermitian matrix algebras over ℝ, ℂ, ℍ, 𝕆, spin factors, and the
//! nilpotent counterexamples (dual numbers, full matrix Jordan algebras),
//! plus direct sums. Each constructor emits a validated algebra together
//! with ground-truth metadata computed from closed forms, never from the
//! engine under test.

use crate::algebra::{Algebra, AlgebraTable, Element};
use crate::error::{Error, Result};
use crate::linalg::{Mat, RowSpace};
use crate::scalar::{half, rat, Rat};
use num_traits::Zero;

/// Coordinate algebra kind for hermitian constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordKind {
    Real,
    Complex,
    Quaternion,
    Octonion,
}

impl CoordKind {
    pub fn dim(self) -> usize {
        match self {
            CoordKind::Real => 1,
            CoordKind::Complex => 2,
            CoordKind::Quaternion => 4,
            CoordKind::Octonion => 8,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CoordKind::Real => "R",
            CoordKind::Complex => "C",
            CoordKind::Quaternion => "H",
            CoordKind::Octonion => "O",
        }
    }
}

/// Composition algebra with a fixed orthonormal unit basis e_0..e_{d-1}:
/// products of basis units are single signed units. Built by Cayley-Dickson
/// doubling from ℝ, which for the octonions yields the Fano-plane
/// convention with oriented triples
/// (1,2,3) (1,4,5) (2,4,6) (3,4,7) (2,5,7) (5,3,6) (1,7,6)
/// and e_i² = −1 for i ≥ 1.
#[derive(Clone, Debug)]
pub struct CoordAlg {
    kind: CoordKind,
    dim: usize,
    // unit_mul[i][j] = (k, sign) with e_i e_j = sign · e_k
    unit_mul: Vec<Vec<(usize, i8)>>,
}

impl CoordAlg {
    pub fn new(kind: CoordKind) -> Self {
        let mut table: Vec<Vec<(usize, i8)>> = vec![vec![(0, 1)]];
        let mut dim = 1;
        while dim < kind.dim() {
            table = cayley_dickson_double(&table, dim);
            dim *= 2;
        }
        CoordAlg {
            kind,
            dim,
            unit_mul: table,
        }
    }

    pub fn kind(&self) -> CoordKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_associative(&self) -> bool {
        self.dim <= 4
    }

    pub fn unit_mul(&self, i: usize, j: usize) -> (usize, i8) {
        self.unit_mul[i][j]
    }

    /// Product of coordinate vectors.
    pub fn mul(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let (k, sign) = self.unit_mul[i][j];
                let term = ai * bj;
                if sign > 0 {
                    out[k] += term;
                } else {
                    out[k] -= term;
                }
            }
        }
        out
    }

    /// Conjugation: fixes e_0, negates every other unit.
    pub fn conj(&self, a: &[Rat]) -> Vec<Rat> {
        a.iter()
            .enumerate()
            .map(|(i, c)| if i == 0 { c.clone() } else { -c })
            .collect()
    }

    pub fn zero(&self) -> Vec<Rat> {
        vec![Rat::zero(); self.dim]
    }

    pub fn unit_vec(&self, i: usize) -> Vec<Rat> {
        let mut v = self.zero();
        v[i] = rat(1);
        v
    }

    /// Norm form N(a) = a ā; multiplicative on every coordinate algebra.
    pub fn norm(&self, a: &[Rat]) -> Rat {
        a.iter().map(|c| c * c).sum()
    }
}

fn cayley_dickson_double(lower: &[Vec<(usize, i8)>], d: usize) -> Vec<Vec<(usize, i8)>> {
    let conj = |i: usize| -> (usize, i8) { if i == 0 { (i, 1) } else { (i, -1) } };
    let mul = |i: usize, j: usize| -> (usize, i8) { lower[i][j] };
    let n = 2 * d;
    let mut out = vec![vec![(0usize, 0i8); n]; n];
    for p in 0..n {
        for q in 0..n {
            // (a,b)(c,e) = (ac − ēb, ea + bc̄)
            let (k, s) = match (p < d, q < d) {
                (true, true) => mul(p, q),
                (true, false) => {
                    // (e_p, 0)(0, e_{q-d}) = (0, e_{q-d} e_p)
                    let (k, s) = mul(q - d, p);
                    (k + d, s)
                }
                (false, true) => {
                    // (0, e_{p-d})(e_q, 0) = (0, e_{p-d} ē_q)
                    let (cq, cs) = conj(q);
                    let (k, s) = mul(p - d, cq);
                    (k + d, s * cs)
                }
                (false, false) => {
                    // (0, e_{p-d})(0, e_{q-d}) = (−ē_{q-d} e_{p-d}, 0)
                    let (cq, cs) = conj(q - d);
                    let (k, s) = mul(cq, p - d);
                    (k, -s * cs)
                }
            };
            out[p][q] = (k, s);
        }
    }
    out
}

/// Square matrix over a coordinate algebra, entries as coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordMatrix {
    pub n: usize,
    pub entries: Vec<Vec<Vec<Rat>>>,
}

impl CoordMatrix {
    pub fn zero(n: usize, coord: &CoordAlg) -> Self {
        CoordMatrix {
            n,
            entries: vec![vec![coord.zero(); n]; n],
        }
    }

    pub fn mul(&self, other: &CoordMatrix, coord: &CoordAlg) -> CoordMatrix {
        let n = self.n;
        let mut out = CoordMatrix::zero(n, coord);
        for i in 0..n {
            for j in 0..n {
                let mut acc = coord.zero();
                for k in 0..n {
                    let p = coord.mul(&self.entries[i][k], &other.entries[k][j]);
                    for (a, b) in acc.iter_mut().zip(p) {
                        *a += b;
                    }
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, other: &CoordMatrix) -> CoordMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                for (a, b) in out.entries[i][j].iter_mut().zip(&other.entries[i][j]) {
                    *a += b;
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> CoordMatrix {
        let mut out = self.clone();
        for row in out.entries.iter_mut() {
            for e in row.iter_mut() {
                for c in e.iter_mut() {
                    *c *= s;
                }
            }
        }
        out
    }

    pub fn conj_transpose(&self, coord: &CoordAlg) -> CoordMatrix {
        let n = self.n;
        let mut out = CoordMatrix::zero(n, coord);
        for i in 0..n {
            for j in 0..n {
                out.entries[j][i] = coord.conj(&self.entries[i][j]);
            }
        }
        out
    }

    pub fn is_hermitian(&self, coord: &CoordAlg) -> bool {
        *self == self.conj_transpose(coord)
    }

    /// Symmetrized product (XY + YX)/2.
    pub fn jordan(&self, other: &CoordMatrix, coord: &CoordAlg) -> CoordMatrix {
        self.mul(other, coord).add(&other.mul(self, coord)).scale(&half())
    }

    pub fn is_zero(&self) -> bool {
        self.entries
            .iter()
            .all(|row| row.iter().all(|e| e.iter().all(|c| c.is_zero())))
    }

    fn flatten(&self) -> Vec<Rat> {
        self.entries
            .iter()
            .flat_map(|row| row.iter().flat_map(|e| e.iter().cloned()))
            .collect()
    }
}

/// Matrix realization of a catalog algebra: each basis element as a concrete
/// matrix over the coordinate algebra. This is the independent oracle route;
/// octonion coordinates are tagged non-associative and excluded from the
/// oracles that rely on associativity.
#[derive(Clone, Debug)]
pub struct AssocRep {
    coord: CoordAlg,
    n: usize,
    basis_mats: Vec<CoordMatrix>,
}

impl AssocRep {
    pub fn coord(&self) -> &CoordAlg {
        &self.coord
    }

    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn is_associative(&self) -> bool {
        self.coord.is_associative()
    }

    pub fn to_matrix(&self, coords: &[Rat]) -> CoordMatrix {
        let mut out = CoordMatrix::zero(self.n, &self.coord);
        for (c, m) in coords.iter().zip(&self.basis_mats) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    pub fn mul(&self, a: &CoordMatrix, b: &CoordMatrix) -> CoordMatrix {
        a.mul(b, &self.coord)
    }

    /// The oracle `a x a` with left-to-right association.
    pub fn sandwich(&self, a: &CoordMatrix, x: &CoordMatrix) -> CoordMatrix {
        self.mul(&self.mul(a, x), a)
    }

    /// Exact kernel of `a ↦ to_matrix(a) · Y` as a subspace of the algebra's
    /// coordinate space.
    pub fn right_mul_kernel(&self, y: &CoordMatrix) -> RowSpace {
        let cols = self.basis_mats.len();
        let images: Vec<Vec<Rat>> = self
            .basis_mats
            .iter()
            .map(|b| self.mul(b, y).flatten())
            .collect();
        let rows = images[0].len();
        let mut m = Mat::zeros(rows, cols);
        for (j, img) in images.iter().enumerate() {
            for (i, v) in img.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m.kernel()
    }
}

/// Ground-truth metadata, from closed forms only.
#[derive(Clone, Debug)]
pub struct ExpectedMeta {
    pub dimension: usize,
    pub summands: usize,
    pub frame_size: usize,
    pub coord_dim: Option<usize>,
    pub has_nilpotents: bool,
    pub formally_real: bool,
    pub label: String,
}

pub struct CatalogEntry {
    pub algebra: Algebra,
    pub expected: ExpectedMeta,
    pub embedding: Option<AssocRep>,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Hermitian n×n matrices over the coordinate algebra, with symmetrized
/// matrix product. Basis: diagonal units E_ii, then for each pair i<j and
/// coordinate unit u the element u·E_ij + ū·E_ji.
pub fn hermitian_algebra(n: usize, kind: CoordKind) -> Result<CatalogEntry> {
    assert!(n >= 1);
    if kind == CoordKind::Octonion && n > 3 {
        return Err(Error::UnsupportedRank { n });
    }
    let coord = CoordAlg::new(kind);
    let d = coord.dim();
    let dim = n + d * n * (n - 1) / 2;
    let mut basis_mats = Vec::with_capacity(dim);
    for i in 0..n {
        let mut m = CoordMatrix::zero(n, &coord);
        m.entries[i][i] = coord.unit_vec(0);
        basis_mats.push(m);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for u in 0..d {
                let mut m = CoordMatrix::zero(n, &coord);
                m.entries[i][j] = coord.unit_vec(u);
                m.entries[j][i] = coord.conj(&coord.unit_vec(u));
                basis_mats.push(m);
            }
        }
    }
    let decompose = |m: &CoordMatrix| -> Vec<Rat> {
        let mut coords = Vec::with_capacity(dim);
        for i in 0..n {
            debug_assert!(m.entries[i][i][1..].iter().all(|c| c.is_zero()));
            coords.push(m.entries[i][i][0].clone());
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for u in 0..d {
                    coords.push(m.entries[i][j][u].clone());
                }
            }
        }
        coords
    };
    let label = format!("H_{}({})", n, kind.symbol());
    let mut table = AlgebraTable::new(dim, label.clone());
    for p in 0..dim {
        for q in p..dim {
            let prod = basis_mats[p].jordan(&basis_mats[q], &coord);
            debug_assert!(prod.is_hermitian(&coord));
            let coords = decompose(&prod);
            let entries: Vec<(usize, Rat)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            table.set_product_sym(p, q, entries);
        }
    }
    let algebra = table.validate()?;
    let exceptional = kind == CoordKind::Octonion && n == 3;
    Ok(CatalogEntry {
        algebra,
        expected: ExpectedMeta {
            dimension: dim,
            summands: 1,
            frame_size: n,
            coord_dim: Some(if n == 1 { 1 } else { d }),
            has_nilpotents: false,
            formally_real: true,
            label: if exceptional {
                format!("{label} exceptional")
            } else {
                label
            },
        },
        embedding: Some(AssocRep {
            coord,
            n,
            basis_mats,
        }),
    })
}

/// Spin factor ℝ ⊕ H on an m-dimensional inner-product space:
/// (λ,u)∘(μ,v) = (λμ + ⟨u,v⟩, λv + μu). Dimension m+1.
pub fn spin_factor(m: usize) -> CatalogEntry {
    assert!(m >= 1);
    let dim = m + 1;
    let mut table = AlgebraTable::new(dim, format!("spin({m})"));
    table.set_product_sym(0, 0, vec![(0, rat(1))]);
    for i in 1..dim {
        table.set_product_sym(0, i, vec![(i, rat(1))]);
        table.set_product_sym(i, i, vec![(0, rat(1))]);
        for j in (i + 1)..dim {
            table.set_product_sym(i, j, vec![]);
        }
    }
    table.set_unit_hint(0);
    let algebra = table.validate().expect("spin factor fails validation");
    CatalogEntry {
        algebra,
        expected: ExpectedMeta {
            dimension: dim,
            summands: if m == 1 { 2 } else { 1 },
            frame_size: 2,
            coord_dim: None,
            has_nilpotents: false,
            formally_real: true,
            label: format!("spin({m})"),
        },
        embedding: None,
    }
}

/// All n×n matrices over ℝ or ℂ under the symmetrized product. Contains
/// nilpotents (off-diagonal matrix units square to zero).
pub fn full_matrix_jordan(n: usize, kind: CoordKind) -> CatalogEntry {
    assert!(n >= 2);
    assert!(
        matches!(kind, CoordKind::Real | CoordKind::Complex),
        "full matrix Jordan algebras are built over R or C"
    );
    let coord = CoordAlg::new(kind);
    let d = coord.dim();
    let dim = n * n * d;
    let mut basis_mats = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            for u in 0..d {
                let mut m = CoordMatrix::zero(n, &coord);
                m.entries[i][j] = coord.unit_vec(u);
                basis_mats.push(m);
            }
        }
    }
    let decompose = |m: &CoordMatrix| -> Vec<Rat> {
        let mut coords = Vec::with_capacity(dim);
        for i in 0..n {
            for j in 0..n {
                for u in 0..d {
                    coords.push(m.entries[i][j][u].clone());
                }
            }
        }
        coords
    };
    let label = format!("M_{}({})_sym", n, kind.symbol());
    let mut table = AlgebraTable::new(dim, label.clone());
    for p in 0..dim {
        for q in p..dim {
            let prod = basis_mats[p].jordan(&basis_mats[q], &coord);
            let entries: Vec<(usize, Rat)> = decompose(&prod)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            table.set_product_sym(p, q, entries);
        }
    }
    let algebra = table.validate().expect("full matrix Jordan fails validation");
    CatalogEntry {
        algebra,
        expected: ExpectedMeta {
            dimension: dim,
            summands: 1,
            frame_size: n,
            coord_dim: None,
            has_nilpotents: true,
            formally_real: false,
            label,
        },
        embedding: Some(AssocRep {
            coord,
            n,
            basis_mats,
        }),
    }
}

/// span{1, ε} with ε² = 0.
pub fn dual_numbers() -> CatalogEntry {
    let mut table = AlgebraTable::new(2, "dual");
    table.set_product_sym(0, 0, vec![(0, rat(1))]);
    table.set_product_sym(0, 1, vec![(1, rat(1))]);
    table.set_product_sym(1, 1, vec![]);
    table.set_unit_hint(0);
    let algebra = table.validate().expect("dual numbers fail validation");
    CatalogEntry {
        algebra,
        expected: ExpectedMeta {
            dimension: 2,
            summands: 1,
            frame_size: 1,
            coord_dim: None,
            has_nilpotents: true,
            formally_real: false,
            label: "dual".into(),
        },
        embedding: None,
    }
}

/// Block-diagonal direct sum with componentwise product.
pub fn direct_sum(entries: &[CatalogEntry]) -> CatalogEntry {
    assert!(!entries.is_empty());
    let dim: usize = entries.iter().map(|e| e.dim()).sum();
    let label = entries
        .iter()
        .map(|e| e.expected.label.clone())
        .collect::<Vec<_>>()
        .join(" + ");
    let mut table = AlgebraTable::new(dim, label.clone());
    let mut offset = 0;
    for entry in entries {
        let n = entry.dim();
        for i in 0..n {
            for j in i..n {
                let shifted: Vec<(usize, Rat)> = entry
                    .algebra
                    .row(i, j)
                    .iter()
                    .map(|(k, c)| (k + offset, c.clone()))
                    .collect();
                table.set_product_sym(offset + i, offset + j, shifted);
            }
        }
        offset += n;
    }
    let algebra = table.validate().expect("direct sum fails validation");
    CatalogEntry {
        algebra,
        expected: ExpectedMeta {
            dimension: dim,
            summands: entries.iter().map(|e| e.expected.summands).sum(),
            frame_size: entries.iter().map(|e| e.expected.frame_size).sum(),
            coord_dim: None,
            has_nilpotents: entries.iter().any(|e| e.expected.has_nilpotents),
            formally_real: entries.iter().all(|e| e.expected.formally_real),
            label,
        },
        embedding: None,
    }
}

/// Resolve a generator name like `h3o`, `spin3`, `dual`, `full2r`, or
/// `sum:h2r+h3c+spin3`.
pub fn by_name(name: &str) -> Result<CatalogEntry> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("unknown catalog name `{name}`"),
    };
    if let Some(rest) = name.strip_prefix("sum:") {
        let parts: Vec<CatalogEntry> = rest.split('+').map(by_name).collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(bad());
        }
        return Ok(direct_sum(&parts));
    }
    if name == "dual" {
        return Ok(dual_numbers());
    }
    let kind_of = |c: char| match c {
        'r' => Some(CoordKind::Real),
        'c' => Some(CoordKind::Complex),
        'h' => Some(CoordKind::Quaternion),
        'o' => Some(CoordKind::Octonion),
        _ => None,
    };
    if let Some(rest) = name.strip_prefix("spin") {
        let m: usize = rest.parse().map_err(|_| bad())?;
        if m == 0 {
            return Err(bad());
        }
        return Ok(spin_factor(m));
    }
    if let Some(rest) = name.strip_prefix("full") {
        if rest.is_empty() {
            return Err(bad());
        }
        let (digits, kind) = rest.split_at(rest.len() - 1);
        let n: usize = digits.parse().map_err(|_| bad())?;
        let kind = kind.chars().next().and_then(kind_of).ok_or_else(bad)?;
        if n < 2 || !matches!(kind, CoordKind::Real | CoordKind::Complex) {
            return Err(bad());
        }
        return Ok(full_matrix_jordan(n, kind));
    }
    if let Some(rest) = name.strip_prefix('h') {
        if rest.is_empty() {
            return Err(bad());
        }
        let (digits, kind) = rest.split_at(rest.len() - 1);
        let n: usize = digits.parse().map_err(|_| bad())?;
        let kind = kind.chars().next().and_then(kind_of).ok_or_else(bad)?;
        if n == 0 {
            return Err(bad());
        }
        return hermitian_algebra(n, kind);
    }
    Err(bad())
}

/// Image of an element under an entry's matrix realization.
pub fn element_matrix(rep: &AssocRep, x: &Element) -> CoordMatrix {
    rep.to_matrix(x.coords())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::ElementSampler;

    #[test]
    fn octonion_units_are_a_composition_algebra() {
        let o = CoordAlg::new(CoordKind::Octonion);
        for i in 1..8 {
            assert_eq!(o.unit_mul(i, i), (0, -1));
        }
        // norm multiplicativity on random pairs certifies the convention
        let mut s = ElementSampler::new(5);
        for _ in 0..40 {
            let a: Vec<Rat> = s.coeffs(8);
            let b: Vec<Rat> = s.coeffs(8);
            assert_eq!(o.norm(&o.mul(&a, &b)), o.norm(&a) * o.norm(&b));
        }
        // alternativity holds, full associativity does not
        let mut s = ElementSampler::new(6);
        let a: Vec<Rat> = s.coeffs(8);
        let b: Vec<Rat> = s.coeffs(8);
        assert_eq!(o.mul(&a, &o.mul(&a, &b)), o.mul(&o.mul(&a, &a), &b));
        let e1 = o.unit_vec(1);
        let e2 = o.unit_vec(2);
        let e4 = o.unit_vec(4);
        assert_ne!(o.mul(&o.mul(&e1, &e2), &e4), o.mul(&e1, &o.mul(&e2, &e4)));
    }

    #[test]
    fn quaternions_associative() {
        let h = CoordAlg::new(CoordKind::Quaternion);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let lhs = h.mul(&h.mul(&h.unit_vec(i), &h.unit_vec(j)), &h.unit_vec(k));
                    let rhs = h.mul(&h.unit_vec(i), &h.mul(&h.unit_vec(j), &h.unit_vec(k)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        // ij = k
        assert_eq!(h.unit_mul(1, 2), (3, 1));
    }

    #[test]
    fn hermitian_dimensions_match_closed_form() {
        for (n, kind, want) in [
            (2, CoordKind::Real, 3),
            (3, CoordKind::Real, 6),
            (3, CoordKind::Complex, 9),
            (4, CoordKind::Quaternion, 28),
            (3, CoordKind::Octonion, 27),
            (2, CoordKind::Octonion, 10),
            (1, CoordKind::Quaternion, 1),
        ] {
            let e = hermitian_algebra(n, kind).unwrap();
            assert_eq!(e.dim(), want, "H_{}({})", n, kind.symbol());
            assert_eq!(e.expected.dimension, want);
            assert!(e.algebra.is_unital());
        }
        assert!(matches!(
            hermitian_algebra(4, CoordKind::Octonion),
            Err(Error::UnsupportedRank { n: 4 })
        ));
    }

    #[test]
    fn spin_factor_relations() {
        let e = spin_factor(3);
        assert_eq!(e.dim(), 4);
        let alg = &e.algebra;
        let one = alg.unit().unwrap();
        let s1 = alg.basis_element(1);
        let s2 = alg.basis_element(2);
        assert_eq!(s1.square(), one);
        assert!(s1.mul(&s2).unwrap().is_zero());
    }

    #[test]
    fn counterexample_constructors() {
        let dual = dual_numbers();
        let eps = dual.algebra.basis_element(1);
        assert!(eps.square().is_zero());
        assert!(dual.expected.has_nilpotents);

        let full = full_matrix_jordan(2, CoordKind::Real);
        assert_eq!(full.dim(), 4);
        // basis order: E11, E12, E21, E22 — E12 squares to zero
        let e12 = full.algebra.basis_element(1);
        assert!(e12.square().is_zero());
    }

    #[test]
    fn direct_sum_dimensions() {
        let s = direct_sum(&[
            hermitian_algebra(2, CoordKind::Real).unwrap(),
            hermitian_algebra(3, CoordKind::Complex).unwrap(),
            spin_factor(3),
        ]);
        assert_eq!(s.dim(), 3 + 9 + 4);
        assert_eq!(s.expected.summands, 3);
        assert!(s.algebra.is_unital());
    }

    #[test]
    fn quad_u_matches_matrix_oracle_on_special_entries() {
        for entry in [
            hermitian_algebra(2, CoordKind::Real).unwrap(),
            hermitian_algebra(3, CoordKind::Real).unwrap(),
            hermitian_algebra(3, CoordKind::Complex).unwrap(),
            hermitian_algebra(2, CoordKind::Quaternion).unwrap(),
            full_matrix_jordan(2, CoordKind::Real),
        ] {
            let rep = entry.embedding.as_ref().unwrap();
            assert!(rep.is_associative());
            let mut s = ElementSampler::with_magnitude(11, 4);
            for _ in 0..25 {
                let a = s.element(&entry.algebra);
                let x = s.element(&entry.algebra);
                let engine = rep.to_matrix(a.quad_u(&x).unwrap().coords());
                let oracle = rep.sandwich(&rep.to_matrix(a.coords()), &rep.to_matrix(x.coords()));
                assert_eq!(engine, oracle, "{}", entry.expected.label);
            }
        }
    }

    #[test]
    fn octonion_rank3_rejects_naive_associative_composition() {
        // U_a(U_b(U_a x)) computed by the engine must disagree with the
        // naively associated matrix product a(b((a x a))b)a for some triple:
        // the exceptional algebra does not embed through this oracle.
        let entry = hermitian_algebra(3, CoordKind::Octonion).unwrap();
        let rep = entry.embedding.as_ref().unwrap();
        assert!(!rep.is_associative());
        let mut s = ElementSampler::with_magnitude(3, 2);
        let mut found = false;
        for _ in 0..20 {
            let a = s.element(&entry.algebra);
            let b = s.element(&entry.algebra);
            let x = s.element(&entry.algebra);
            let engine = a
                .quad_u(&b.quad_u(&a.quad_u(&x).unwrap()).unwrap())
                .unwrap();
            let am = rep.to_matrix(a.coords());
            let bm = rep.to_matrix(b.coords());
            let xm = rep.to_matrix(x.coords());
            let naive = rep.sandwich(&am, &rep.sandwich(&bm, &rep.sandwich(&am, &xm)));
            if rep.to_matrix(engine.coords()) != naive {
                found = true;
                break;
            }
        }
        assert!(found, "no exceptionality witness found");
    }

    #[test]
    fn by_name_resolves() {
        assert_eq!(by_name("h3o").unwrap().dim(), 27);
        assert_eq!(by_name("spin3").unwrap().dim(), 4);
        assert_eq!(by_name("dual").unwrap().dim(), 2);
        assert_eq!(by_name("full2r").unwrap().dim(), 4);
        assert_eq!(by_name("sum:h2r+h3c+spin3").unwrap().dim(), 16);
        assert!(by_name("h9x").is_err());
        assert!(by_name("full1r").is_err());
    }
}
