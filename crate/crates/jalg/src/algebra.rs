//! Finite-dimensional commutative algebras given by structure constants,
//! validation of the Jordan axioms, and the basic operator calculus: the
//! bilinear product, the quadratic representation, triple products, powers
//! and minimal polynomials.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::poly::Poly;
use crate::scalar::{rat, Rat};
use num_traits::Zero;

/// Raw structure-constant table for a commutative bilinear product:
/// `b_i ∘ b_j = Σ_k c[i][j][k] b_k`. Nothing is assumed until
/// [`AlgebraTable::validate`] has run.
#[derive(Clone, Debug)]
pub struct AlgebraTable {
    dim: usize,
    label: String,
    unit_hint: Option<usize>,
    rows: Vec<Vec<(usize, Rat)>>,
}

impl AlgebraTable {
    pub fn new(dim: usize, label: impl Into<String>) -> Self {
        assert!(dim > 0, "algebra dimension must be positive");
        AlgebraTable {
            dim,
            label: label.into(),
            unit_hint: None,
            rows: vec![Vec::new(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn unit_hint(&self) -> Option<usize> {
        self.unit_hint
    }

    pub fn set_unit_hint(&mut self, index: usize) {
        assert!(index < self.dim);
        self.unit_hint = Some(index);
    }

    /// Sets `b_i ∘ b_j` only; the mirror entry is left untouched.
    pub fn set_product(&mut self, i: usize, j: usize, entries: Vec<(usize, Rat)>) {
        assert!(i < self.dim && j < self.dim);
        assert!(entries.iter().all(|(k, _)| *k < self.dim));
        let mut entries: Vec<(usize, Rat)> = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        entries.sort_by_key(|(k, _)| *k);
        self.rows[i * self.dim + j] = entries;
    }

    /// Sets `b_i ∘ b_j` and `b_j ∘ b_i` together.
    pub fn set_product_sym(&mut self, i: usize, j: usize, entries: Vec<(usize, Rat)>) {
        self.set_product(i, j, entries.clone());
        if i != j {
            self.set_product(j, i, entries);
        }
    }

    pub fn row(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.rows[i * self.dim + j]
    }

    /// Additively perturb a single structure constant (test hook for the
    /// validator's rejection paths).
    pub fn perturb(&mut self, i: usize, j: usize, k: usize, delta: Rat) {
        let row = &mut self.rows[i * self.dim + j];
        match row.iter_mut().find(|(idx, _)| *idx == k) {
            Some((_, c)) => *c += delta,
            None => {
                row.push((k, delta));
                row.sort_by_key(|(idx, _)| *idx);
            }
        }
        self.rows[i * self.dim + j].retain(|(_, c)| !c.is_zero());
    }

    fn dense_row(&self, i: usize, j: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        for (k, c) in self.row(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// Accumulate `scale · (u ∘ v)` into `acc` for coordinate vectors given
    /// as sparse lists.
    fn mul_sparse_into(&self, u: &[(usize, Rat)], v: &[(usize, Rat)], scale: &Rat, acc: &mut [Rat]) {
        for (a, ca) in u {
            for (b, cb) in v {
                let f = ca * cb * scale;
                for (k, c) in self.row(*a, *b) {
                    acc[*k] += c * &f;
                }
            }
        }
    }

    /// Commutativity plus the full char-0 linearization of the Jordan
    /// identity on all basis quadruples; finds the unit via one linear solve.
    pub fn validate(self) -> Result<Algebra> {
        let n = self.dim;
        // commutativity
        for i in 0..n {
            for j in (i + 1)..n {
                let a = self.dense_row(i, j);
                let b = self.dense_row(j, i);
                if a != b {
                    let k = (0..n).find(|&k| a[k] != b[k]).unwrap();
                    return Err(Error::NotCommutative { i, j, k });
                }
            }
        }
        // linearized Jordan identity:
        //   Σ over pairings ((p,q),r) of {(i,j),k} of
        //     (b_p∘b_q)∘(b_r∘b_l) − b_r∘((b_p∘b_q)∘b_l)  = 0   for all l
        let one = rat(1);
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let pairings = [(i, j, k), (j, k, i), (k, i, j)];
                    for l in 0..n {
                        let mut defect = vec![Rat::zero(); n];
                        for &(p, q, r) in &pairings {
                            let u = self.row(p, q);
                            self.mul_sparse_into(u, self.row(r, l), &one, &mut defect);
                            // minus b_r ∘ (u ∘ b_l)
                            for (a, ca) in u {
                                for (m, cm) in self.row(*a, l) {
                                    let f = ca * cm;
                                    for (t, ct) in self.row(r, *m) {
                                        defect[*t] -= ct * &f;
                                    }
                                }
                            }
                        }
                        if defect.iter().any(|d| !d.is_zero()) {
                            return Err(Error::JordanIdentityFails { i, j, k, l });
                        }
                    }
                }
            }
        }
        // unit search: u with u ∘ b_i = b_i for all i, one stacked solve
        let mut sys = Mat::zeros(n * n, n);
        let mut rhs = vec![Rat::zero(); n * n];
        for i in 0..n {
            for p in 0..n {
                for (k, c) in self.row(p, i) {
                    sys[(i * n + k, p)] = c.clone();
                }
            }
            rhs[i * n + i] = rat(1);
        }
        let unit = sys.solve(&rhs);
        if let Some(hint) = self.unit_hint {
            let ok = unit.as_ref().is_some_and(|u| {
                u.iter()
                    .enumerate()
                    .all(|(p, c)| if p == hint { c == &rat(1) } else { c.is_zero() })
            });
            if !ok {
                return Err(Error::InvalidDeclaredUnit { index: hint });
            }
        }
        let unit_basis_index = unit.as_ref().and_then(|u| {
            let ones: Vec<usize> = (0..n).filter(|&p| !u[p].is_zero()).collect();
            match ones.as_slice() {
                [p] if u[*p] == rat(1) => Some(*p),
                _ => None,
            }
        });
        Ok(Algebra(Arc::new(AlgebraInner {
            dim: n,
            label: self.label,
            rows: self.rows,
            unit,
            unit_basis_index,
        })))
    }
}

#[derive(Debug)]
struct AlgebraInner {
    dim: usize,
    label: String,
    rows: Vec<Vec<(usize, Rat)>>,
    unit: Option<Vec<Rat>>,
    unit_basis_index: Option<usize>,
}

/// A validated Jordan algebra. Immutable and cheaply cloneable; elements
/// hold a handle to it and refuse to combine across distinct handles.
#[derive(Clone, Debug)]
pub struct Algebra(Arc<AlgebraInner>);

impl Algebra {
    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn same(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn is_unital(&self) -> bool {
        self.0.unit.is_some()
    }

    pub fn unit(&self) -> Result<Element> {
        match &self.0.unit {
            Some(u) => Ok(self.element(u.clone())),
            None => Err(Error::NoUnit),
        }
    }

    /// Index of the unit in the basis, when the unit is a basis vector.
    pub fn unit_basis_index(&self) -> Option<usize> {
        self.0.unit_basis_index
    }

    pub fn row(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.0.rows[i * self.0.dim + j]
    }

    pub fn element(&self, coords: Vec<Rat>) -> Element {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        Element {
            alg: self.clone(),
            coords,
        }
    }

    pub fn element_i64(&self, coords: &[i64]) -> Element {
        self.element(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut coords = vec![Rat::zero(); self.dim()];
        coords[i] = rat(1);
        self.element(coords)
    }

    pub fn zero(&self) -> Element {
        self.element(vec![Rat::zero(); self.dim()])
    }

    pub fn basis(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.dim()).map(|i| self.basis_element(i))
    }

    pub(crate) fn mul_coords(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for (p, up) in u.iter().enumerate() {
            if up.is_zero() {
                continue;
            }
            for (q, vq) in v.iter().enumerate() {
                if vq.is_zero() {
                    continue;
                }
                let f = up * vq;
                for (k, c) in self.row(p, q) {
                    out[*k] += c * &f;
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x ∘ y` in the basis.
    pub(crate) fn l_matrix(&self, x: &[Rat]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.row(p, j) {
                    m[(*k, j)] += c * xp;
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ U_x y = 2 x∘(x∘y) − x²∘y`, via `U_x = 2L_x² − L_{x²}`.
    pub(crate) fn u_matrix(&self, x: &[Rat]) -> Mat {
        let lx = self.l_matrix(x);
        let lx2 = self.l_matrix(&self.mul_coords(x, x));
        let two = lx.matmul(&lx).scale(&rat(2));
        two.sub(&lx2)
    }
}

/// Coordinate vector relative to an algebra's basis.
#[derive(Clone, Debug)]
pub struct Element {
    alg: Algebra,
    coords: Vec<Rat>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same(&other.alg) && self.coords == other.coords
    }
}
impl Eq for Element {}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::error::coords_str(&self.coords))
    }
}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.alg.same(&other.alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(self.alg.element(coords))
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(self.alg.element(coords))
    }

    pub fn neg(&self) -> Element {
        self.alg.element(self.coords.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &Rat) -> Element {
        self.alg.element(self.coords.iter().map(|c| c * s).collect())
    }

    /// The Jordan product.
    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(self.alg.element(self.alg.mul_coords(&self.coords, &other.coords)))
    }

    pub fn square(&self) -> Element {
        self.alg.element(self.alg.mul_coords(&self.coords, &self.coords))
    }

    /// Quadratic representation `U_a b = 2(a∘b)∘a − a²∘b`.
    pub fn quad_u(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let ab = self.alg.mul_coords(&self.coords, &other.coords);
        let aba = self.alg.mul_coords(&ab, &self.coords);
        let a2 = self.alg.mul_coords(&self.coords, &self.coords);
        let a2b = self.alg.mul_coords(&a2, &other.coords);
        let coords = aba
            .into_iter()
            .zip(a2b)
            .map(|(x, y)| x * rat(2) - y)
            .collect();
        Ok(self.alg.element(coords))
    }

    /// Jordan triple product `{a b c} = (a∘b)∘c + (c∘b)∘a − (a∘c)∘b`.
    pub fn triple(&self, b: &Element, c: &Element) -> Result<Element> {
        self.check_same(b)?;
        self.check_same(c)?;
        let alg = &self.alg;
        let ab_c = alg.mul_coords(&alg.mul_coords(&self.coords, &b.coords), &c.coords);
        let cb_a = alg.mul_coords(&alg.mul_coords(&c.coords, &b.coords), &self.coords);
        let ac_b = alg.mul_coords(&alg.mul_coords(&self.coords, &c.coords), &b.coords);
        let coords = ab_c
            .into_iter()
            .zip(cb_a)
            .zip(ac_b)
            .map(|((x, y), z)| x + y - z)
            .collect();
        Ok(alg.element(coords))
    }

    /// Jordan power. `k = 0` needs a unit.
    pub fn power(&self, k: usize) -> Result<Element> {
        if k == 0 {
            return self.alg.unit();
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Matrix of `b ↦ a ∘ b`.
    pub fn l_operator(&self) -> LinearOperator {
        LinearOperator {
            alg: self.alg.clone(),
            mat: self.alg.l_matrix(&self.coords),
        }
    }

    /// Matrix of `b ↦ U_a b`.
    pub fn u_operator(&self) -> LinearOperator {
        LinearOperator {
            alg: self.alg.clone(),
            mat: self.alg.u_matrix(&self.coords),
        }
    }

    /// Least-degree monic `m` with `m(a) = 0`; found at the first linear
    /// dependence among `1, a, a², …`. Requires a unit.
    pub fn minimal_polynomial(&self) -> Result<Poly> {
        let unit = self.alg.unit()?;
        let n = self.alg.dim();
        let mut powers: Vec<Vec<Rat>> = vec![unit.coords.clone()];
        loop {
            let k = powers.len();
            let next = if k == 1 {
                self.coords.clone()
            } else {
                self.alg.mul_coords(powers.last().unwrap(), &self.coords)
            };
            // is `next` dependent on the previous powers?
            let mut stacked = Mat::zeros(n, k);
            for (c, p) in powers.iter().enumerate() {
                for r in 0..n {
                    stacked[(r, c)] = p[r].clone();
                }
            }
            if let Some(coeffs) = stacked.solve(&next) {
                let mut m = coeffs.iter().map(|c| -c.clone()).collect::<Vec<_>>();
                m.push(rat(1));
                return Ok(Poly::new(m));
            }
            powers.push(next);
            if k > n {
                return Err(Error::Internal(
                    "no linear dependence among powers up to the dimension".into(),
                ));
            }
        }
    }

    /// Horner evaluation of `p` at this element, with the constant term
    /// multiplying `unit` (pass the algebra unit, or the local unit of a
    /// subalgebra such as `U_e(A)`).
    pub fn eval_poly(&self, p: &Poly, unit: &Element) -> Result<Element> {
        self.check_same(unit)?;
        if p.is_zero() {
            return Ok(self.alg.zero());
        }
        let cs = p.coeffs();
        let mut acc = unit.scale(&cs[cs.len() - 1]);
        for c in cs[..cs.len() - 1].iter().rev() {
            acc = acc.mul(self)?.add(&unit.scale(c))?;
        }
        Ok(acc)
    }
}

/// An exact matrix acting on coordinate vectors.
#[derive(Clone, Debug)]
pub struct LinearOperator {
    alg: Algebra,
    mat: Mat,
}

impl PartialEq for LinearOperator {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same(&other.alg) && self.mat == other.mat
    }
}
impl Eq for LinearOperator {}

impl LinearOperator {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if !self.alg.same(&x.alg) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.alg.element(self.mat.apply(&x.coords)))
    }

    pub fn compose(&self, other: &LinearOperator) -> Result<LinearOperator> {
        if !self.alg.same(&other.alg) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(LinearOperator {
            alg: self.alg.clone(),
            mat: self.mat.matmul(&other.mat),
        })
    }

    pub fn commutes_with(&self, other: &LinearOperator) -> bool {
        self.mat.matmul(&other.mat) == other.mat.matmul(&self.mat)
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn trace(&self) -> Rat {
        (0..self.mat.nrows()).map(|i| self.mat[(i, i)].clone()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::half;

    /// dual numbers: basis (1, ε), ε² = 0
    pub fn dual_table() -> AlgebraTable {
        let mut t = AlgebraTable::new(2, "dual");
        t.set_product_sym(0, 0, vec![(0, rat(1))]);
        t.set_product_sym(0, 1, vec![(1, rat(1))]);
        t.set_product_sym(1, 1, vec![]);
        t.set_unit_hint(0);
        t
    }

    /// H_2(R) with basis E11, E22, S = E12+E21
    pub fn h2r_table() -> AlgebraTable {
        let mut t = AlgebraTable::new(3, "h2r-hand");
        t.set_product_sym(0, 0, vec![(0, rat(1))]);
        t.set_product_sym(1, 1, vec![(1, rat(1))]);
        t.set_product_sym(0, 1, vec![]);
        t.set_product_sym(0, 2, vec![(2, half())]);
        t.set_product_sym(1, 2, vec![(2, half())]);
        t.set_product_sym(2, 2, vec![(0, rat(1)), (1, rat(1))]);
        t
    }

    #[test]
    fn dual_numbers_validate_unital() {
        let alg = dual_table().validate().unwrap();
        assert!(alg.is_unital());
        assert_eq!(alg.unit_basis_index(), Some(0));
        let eps = alg.basis_element(1);
        assert!(eps.square().is_zero());
    }

    #[test]
    fn h2r_validates_and_unit_found_by_solve() {
        let alg = h2r_table().validate().unwrap();
        assert!(alg.is_unital());
        let one = alg.unit().unwrap();
        assert_eq!(one.coords(), &[rat(1), rat(1), rat(0)]);
        for b in alg.basis() {
            assert_eq!(one.mul(&b).unwrap(), b);
        }
    }

    #[test]
    fn h2r_products_match_matrix_oracle() {
        // E11 ∘ S = (1/2) S
        let alg = h2r_table().validate().unwrap();
        let e11 = alg.basis_element(0);
        let s = alg.basis_element(2);
        assert_eq!(e11.mul(&s).unwrap(), s.scale(&half()));
    }

    #[test]
    fn perturbed_table_rejected() {
        let mut t = h2r_table();
        t.perturb(2, 2, 0, rat(1));
        match t.validate() {
            Err(Error::JordanIdentityFails { .. }) => {}
            other => panic!("expected Jordan failure, got {other:?}"),
        }
        let mut t = h2r_table();
        t.perturb(0, 2, 2, rat(1)); // one-sided: breaks commutativity
        match t.validate() {
            Err(Error::NotCommutative { .. }) => {}
            other => panic!("expected commutativity failure, got {other:?}"),
        }
    }

    #[test]
    fn quad_u_agrees_with_triple_and_operator() {
        let alg = h2r_table().validate().unwrap();
        let a = alg.element_i64(&[2, -1, 3]);
        let b = alg.element_i64(&[1, 5, -2]);
        let direct = a.quad_u(&b).unwrap();
        assert_eq!(direct, a.triple(&b, &a).unwrap());
        assert_eq!(direct, a.u_operator().apply(&b).unwrap());
        // identity U_a U_a = U_{a²}
        let lhs = a.quad_u(&a.quad_u(&b).unwrap()).unwrap();
        let rhs = a.square().quad_u(&b).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_u_is_identity() {
        let alg = h2r_table().validate().unwrap();
        let one = alg.unit().unwrap();
        let b = alg.element_i64(&[7, -3, 2]);
        assert_eq!(one.quad_u(&b).unwrap(), b);
        assert_eq!(one.l_operator().matrix(), &Mat::identity(3));
        assert!(alg.zero().u_operator().matrix().is_zero());
    }

    #[test]
    fn minimal_polynomials() {
        let alg = h2r_table().validate().unwrap();
        // idempotent not 0 or 1: t² − t
        let e = alg.basis_element(0);
        let m = e.minimal_polynomial().unwrap();
        assert_eq!(m, Poly::new(vec![rat(0), rat(-1), rat(1)]));
        // ε in dual numbers: t²
        let dual = dual_table().validate().unwrap();
        let eps = dual.basis_element(1);
        assert_eq!(eps.minimal_polynomial().unwrap(), Poly::new(vec![rat(0), rat(0), rat(1)]));
        // m(a) evaluated through Jordan powers is zero
        let a = alg.element_i64(&[3, -2, 5]);
        let m = a.minimal_polynomial().unwrap();
        let one = alg.unit().unwrap();
        assert!(a.eval_poly(&m, &one).unwrap().is_zero());
    }

    #[test]
    fn mismatched_algebras_refused() {
        let a1 = h2r_table().validate().unwrap();
        let a2 = h2r_table().validate().unwrap();
        let x = a1.basis_element(0);
        let y = a2.basis_element(0);
        assert!(matches!(x.mul(&y), Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn declared_unit_checked() {
        let mut t = h2r_table();
        t.set_unit_hint(0); // E11 is not the unit
        assert!(matches!(t.validate(), Err(Error::InvalidDeclaredUnit { index: 0 })));
    }
}
