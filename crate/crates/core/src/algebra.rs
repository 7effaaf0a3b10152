//! Finite-dimensional associative algebras given by structure constants,
//! their bimodules, linear maps, and abelian extensions `A ⊕ M`.

use crate::cochains::Cochain;
use crate::error::{input, Error, Result};
use crate::linalg;
use crate::scalar::{Field, Scalar};
use crate::tensor::{add_vec, basis_vector, tuples, MultiLinear};
use crate::verdict::{first_failure, Verdict};

/// Checks `(eᵢeⱼ)eₖ = eᵢ(eⱼeₖ)` for every basis triple.
///
/// The witness is the lexicographically first failing `(i, j, k)` together
/// with both evaluated sides.
pub fn assoc_check(product: &MultiLinear) -> Result<Verdict> {
    let n = product.output_dim();
    if product.input_dims() != [n, n] {
        return input(format!("structure constants must have shape {n}×{n}×{n}, got {:?}→{n}", product.input_dims()));
    }
    let w = first_failure("associativity", tuples(&[n, n, n]), |t| {
        let ij = product.image(&[t[0], t[1]]);
        let jk = product.image(&[t[1], t[2]]);
        let ek = basis_vector(product.field(), n, t[2]);
        let ei = basis_vector(product.field(), n, t[0]);
        (product.apply(&[ij, &ek]), product.apply(&[&ei, jk]))
    });
    Ok(Verdict::from_option(w))
}

/// An associative algebra with basis `e₀ … e_{dim-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    product: MultiLinear,
    labels: Option<Vec<String>>,
}

impl Algebra {
    /// Validates the structure constants; non-associative input is rejected.
    pub fn new(product: MultiLinear) -> Result<Self> {
        let verdict = assoc_check(&product)?;
        if let Some(w) = verdict.witness() {
            return Err(Error::Input(format!("structure constants are not associative: {w}")));
        }
        Ok(Algebra { product, labels: None })
    }

    /// Builds an algebra from `c[i][j][k]`, the `eₖ`-coefficient of `eᵢeⱼ`.
    pub fn from_constants(field: Field, dim: usize, c: impl Fn(usize, usize, usize) -> i64) -> Result<Self> {
        Algebra::new(MultiLinear::from_fn(field, &[dim, dim], dim, |t, k| field.from_int(c(t[0], t[1], k))))
    }

    /// The algebra with identically zero product.
    pub fn null(field: Field, dim: usize) -> Self {
        Algebra { product: MultiLinear::zeros(field, &[dim, dim], dim), labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return input(format!("{} labels for an algebra of dimension {}", labels.len(), self.dim()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn field(&self) -> Field {
        self.product.field()
    }

    pub fn dim(&self) -> usize {
        self.product.output_dim()
    }

    pub fn product(&self) -> &MultiLinear {
        &self.product
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.product.apply(&[a, b])
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.field(), self.dim(), i)
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field().zero(); self.dim()]
    }

    /// The two-sided unit, if the algebra has one.
    pub fn unit(&self) -> Option<Vec<Scalar>> {
        let n = self.dim();
        let f = self.field();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.product.entry(&[i, j], k).clone()).collect());
                rhs.push(if j == k { f.one() } else { f.zero() });
                rows.push((0..n).map(|i| self.product.entry(&[j, i], k).clone()).collect());
                rhs.push(if j == k { f.one() } else { f.zero() });
            }
        }
        if n == 0 {
            return Some(Vec::new());
        }
        linalg::solve(f, &rows, &rhs)
    }
}

/// Checks the three bimodule axioms on basis triples.
///
/// `left` has shape `dim_A × dim_M → dim_M` and `right` `dim_M × dim_A → dim_M`.
/// Reports the first failure of each violated axiom.
pub fn bimodule_check(algebra: &Algebra, left: &MultiLinear, right: &MultiLinear) -> Result<Verdict> {
    let a = algebra.dim();
    let m = left.output_dim();
    if left.input_dims() != [a, m] || right.input_dims() != [m, a] || right.output_dim() != m {
        return input(format!(
            "bimodule actions must have shapes {a}×{m}→{m} and {m}×{a}→{m}, got {:?}→{} and {:?}→{}",
            left.input_dims(),
            left.output_dim(),
            right.input_dims(),
            right.output_dim()
        ));
    }
    if left.field() != algebra.field() || right.field() != algebra.field() {
        return input("bimodule and algebra are over different fields");
    }
    let f = algebra.field();
    let ea = |i| basis_vector(f, a, i);
    let em = |i| basis_vector(f, m, i);
    let mut verdict = Verdict::pass();
    // (ab)·m = a·(b·m)
    verdict.failures.extend(first_failure("(ab)·m = a·(b·m)", tuples(&[a, a, m]), |t| {
        let ab = algebra.product().image(&[t[0], t[1]]);
        let lhs = left.apply(&[ab, &em(t[2])]);
        let bm = left.image(&[t[1], t[2]]);
        let rhs = left.apply(&[&ea(t[0]), bm]);
        (lhs, rhs)
    }));
    // m·(ab) = (m·a)·b
    verdict.failures.extend(first_failure("m·(ab) = (m·a)·b", tuples(&[m, a, a]), |t| {
        let ab = algebra.product().image(&[t[1], t[2]]);
        let lhs = right.apply(&[&em(t[0]), ab]);
        let ma = right.image(&[t[0], t[1]]);
        let rhs = right.apply(&[ma, &ea(t[2])]);
        (lhs, rhs)
    }));
    // (a·m)·b = a·(m·b)
    verdict.failures.extend(first_failure("(a·m)·b = a·(m·b)", tuples(&[a, m, a]), |t| {
        let am = left.image(&[t[0], t[1]]);
        let lhs = right.apply(&[am, &ea(t[2])]);
        let mb = right.image(&[t[1], t[2]]);
        let rhs = left.apply(&[&ea(t[0]), mb]);
        (lhs, rhs)
    }));
    Ok(verdict)
}

/// A bimodule over an [`Algebra`], validated at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    algebra_dim: usize,
    left: MultiLinear,
    right: MultiLinear,
}

impl Bimodule {
    pub fn new(algebra: &Algebra, left: MultiLinear, right: MultiLinear) -> Result<Self> {
        let verdict = bimodule_check(algebra, &left, &right)?;
        if let Some(w) = verdict.witness() {
            return Err(Error::Input(format!("actions do not form a bimodule: {w}")));
        }
        Ok(Bimodule { algebra_dim: algebra.dim(), left, right })
    }

    /// `M = A` with both actions given by the product.
    pub fn regular(algebra: &Algebra) -> Self {
        Bimodule { algebra_dim: algebra.dim(), left: algebra.product().clone(), right: algebra.product().clone() }
    }

    /// `M = A*` with `(a·f)(b) = f(ba)` and `(f·a)(b) = f(ab)`, in the dual basis.
    pub fn dual(algebra: &Algebra) -> Self {
        let n = algebra.dim();
        let c = algebra.product();
        // (e_p · e^q)(e_r) = e^q(e_r e_p) = c[r][p][q]
        let left = MultiLinear::from_fn(algebra.field(), &[n, n], n, |t, r| c.entry(&[r, t[0]], t[1]).clone());
        // (e^q · e_p)(e_r) = e^q(e_p e_r) = c[p][r][q]
        let right = MultiLinear::from_fn(algebra.field(), &[n, n], n, |t, r| c.entry(&[t[1], r], t[0]).clone());
        Bimodule { algebra_dim: n, left, right }
    }

    /// The zero bimodule structure on a space of dimension `dim`.
    pub fn trivial(algebra: &Algebra, dim: usize) -> Self {
        let a = algebra.dim();
        Bimodule {
            algebra_dim: a,
            left: MultiLinear::zeros(algebra.field(), &[a, dim], dim),
            right: MultiLinear::zeros(algebra.field(), &[dim, a], dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.left.output_dim()
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn field(&self) -> Field {
        self.left.field()
    }

    pub fn left(&self) -> &MultiLinear {
        &self.left
    }

    pub fn right(&self) -> &MultiLinear {
        &self.right
    }

    /// `a·m`
    pub fn act_left(&self, a: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.left.apply(&[a, m])
    }

    /// `m·a`
    pub fn act_right(&self, m: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.right.apply(&[m, a])
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.field(), self.dim(), i)
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field().zero(); self.dim()]
    }

    /// Errors unless this module sits over `algebra`.
    pub fn ensure_over(&self, algebra: &Algebra) -> Result<()> {
        if self.algebra_dim != algebra.dim() || self.field() != algebra.field() {
            return input(format!(
                "bimodule over a {}-dimensional algebra in {} used with a {}-dimensional algebra in {}",
                self.algebra_dim,
                self.field(),
                algebra.dim(),
                algebra.field()
            ));
        }
        Ok(())
    }
}

/// A linear map between coordinate spaces; `matrix[i][j]` is the `j`-th
/// coordinate of the image of the `i`-th source basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: MultiLinear,
}

impl LinearMap {
    pub fn new(matrix: MultiLinear) -> Result<Self> {
        if matrix.arity() != 1 {
            return input(format!("a linear map has arity 1, got {}", matrix.arity()));
        }
        Ok(LinearMap { matrix })
    }

    /// Builds from rows indexed by source basis vectors.
    pub fn from_rows(field: Field, source: usize, target: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.len() != source || rows.iter().any(|r| r.len() != target) {
            return input(format!("matrix must have {source} rows of length {target}"));
        }
        LinearMap::new(MultiLinear::from_flat(field, &[source], target, rows.into_iter().flatten().collect())?)
    }

    pub fn from_fn(field: Field, source: usize, target: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        LinearMap { matrix: MultiLinear::from_fn(field, &[source], target, |t, j| f(t[0], j)) }
    }

    pub fn zero(field: Field, source: usize, target: usize) -> Self {
        LinearMap { matrix: MultiLinear::zeros(field, &[source], target) }
    }

    pub fn identity(field: Field, dim: usize) -> Self {
        LinearMap::from_fn(field, dim, dim, |i, j| if i == j { field.one() } else { field.zero() })
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.input_dims()[0]
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.output_dim()
    }

    pub fn matrix(&self) -> &MultiLinear {
        &self.matrix
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.source_dim()).map(|i| self.image(i).to_vec()).collect()
    }

    /// Image of the `i`-th source basis vector.
    pub fn image(&self, i: usize) -> &[Scalar] {
        self.matrix.image(&[i])
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(&[v])
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.target_dim() != self.source_dim() {
            return input(format!(
                "cannot compose a map from dimension {} after one into dimension {}",
                self.source_dim(),
                inner.target_dim()
            ));
        }
        Ok(LinearMap {
            matrix: MultiLinear::from_images(self.field(), &[inner.source_dim()], self.target_dim(), |t| {
                self.apply(inner.image(t[0]))
            }),
        })
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap { matrix: self.matrix.scale(s) }
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap { matrix: self.matrix.try_add(&other.matrix)? })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap { matrix: self.matrix.try_sub(&other.matrix)? })
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        if self.source_dim() != self.target_dim() {
            return None;
        }
        let inv = linalg::invert(self.field(), &self.rows())?;
        Some(LinearMap::from_rows(self.field(), self.source_dim(), self.target_dim(), inv).expect("square"))
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows())
    }
}

/// Coordinates on `A ⊕ M`: the `A` block first, then the `M` block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectSum {
    pub a: usize,
    pub m: usize,
}

impl DirectSum {
    pub fn new(a: usize, m: usize) -> Self {
        DirectSum { a, m }
    }

    pub fn dim(&self) -> usize {
        self.a + self.m
    }

    pub fn join(&self, a: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(a.len(), self.a);
        debug_assert_eq!(m.len(), self.m);
        a.iter().chain(m).cloned().collect()
    }

    pub fn split<'v>(&self, v: &'v [Scalar]) -> (&'v [Scalar], &'v [Scalar]) {
        v.split_at(self.a)
    }

    /// Index of `m_j` in the joint basis.
    pub fn m_index(&self, j: usize) -> usize {
        self.a + j
    }
}

/// The product `(a,m)(b,n) = (ab, a·n + m·b + φ(a,b))` on `A ⊕ M`, as raw
/// structure constants. `φ = None` gives the semidirect product.
fn extension_product(algebra: &Algebra, module: &Bimodule, phi: Option<&Cochain>) -> Result<MultiLinear> {
    module.ensure_over(algebra)?;
    let sum = DirectSum::new(algebra.dim(), module.dim());
    let n = sum.dim();
    let f = algebra.field();
    Ok(MultiLinear::from_images(f, &[n, n], n, |t| {
        let x = basis_vector(f, n, t[0]);
        let y = basis_vector(f, n, t[1]);
        let (a, m) = sum.split(&x);
        let (b, nn) = sum.split(&y);
        let ab = algebra.mul(a, b);
        let mut mpart = add_vec(&module.act_left(a, nn), &module.act_right(m, b));
        if let Some(phi) = phi {
            mpart = add_vec(&mpart, &phi.apply(&[a, b]));
        }
        sum.join(&ab, &mpart)
    }))
}

/// The semidirect product `A ⊕₀ M`.
pub fn semidirect(algebra: &Algebra, module: &Bimodule) -> Result<Algebra> {
    let product = extension_product(algebra, module, None)?;
    // Associative whenever the module is; the constructor re-validates.
    Algebra::new(product)
}

/// Structure constants of the twisted extension `A ⊕_φ M`.
///
/// The result is associative exactly when `φ` is a Hochschild 2-cocycle, so it
/// is returned as a raw product; run [`assoc_check`] or wrap with
/// [`Algebra::new`] as needed.
pub fn twisted_extension(algebra: &Algebra, module: &Bimodule, phi: &Cochain) -> Result<MultiLinear> {
    phi.ensure_shape(algebra, module, 2)?;
    extension_product(algebra, module, Some(phi))
}

/// Outcome of [`subspace_closed`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Closure {
    Closed,
    /// The product of basis vectors `pair.0` and `pair.1` leaves the span.
    Escapes {
        pair: (usize, usize),
        product: Vec<Scalar>,
    },
}

impl Closure {
    pub fn is_closed(&self) -> bool {
        matches!(self, Closure::Closed)
    }
}

/// Whether the span of `basis` is closed under `product`.
pub fn subspace_closed(product: &MultiLinear, basis: &[Vec<Scalar>]) -> Result<Closure> {
    let n = product.output_dim();
    if product.input_dims() != [n, n] {
        return input("subspace_closed needs a bilinear product on one space");
    }
    if basis.iter().any(|v| v.len() != n) {
        return input(format!("basis vectors must have length {n}"));
    }
    if linalg::rank(basis) != basis.len() {
        return input("basis vectors are linearly dependent");
    }
    let mut reduced = basis.to_vec();
    linalg::row_reduce(&mut reduced);
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let p = product.apply(&[&basis[i], &basis[j]]);
            if !linalg::in_span(&reduced, &p) {
                return Ok(Closure::Escapes { pair: (i, j), product: p });
            }
        }
    }
    Ok(Closure::Closed)
}

/// Checks `T(P(x, y)) = Q(T x, T y)` on basis pairs, for invertible `T`.
pub fn intertwiner_check(t: &LinearMap, p: &MultiLinear, q: &MultiLinear) -> Result<Verdict> {
    let n = t.source_dim();
    if t.target_dim() != n {
        return input("intertwiner must be an endomorphism");
    }
    for s in [p, q] {
        if s.input_dims() != [n, n] || s.output_dim() != n {
            return input(format!("products must be bilinear maps on a {n}-dimensional space"));
        }
    }
    if t.rank() != n {
        return input("intertwiner is singular");
    }
    let w = first_failure("T(P(x,y)) = Q(Tx,Ty)", tuples(&[n, n]), |ij| {
        let lhs = t.apply(p.image(ij));
        let rhs = q.apply(&[t.image(ij[0]), t.image(ij[1])]);
        (lhs, rhs)
    });
    Ok(Verdict::from_option(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers(f: Field) -> Algebra {
        // e0 = 1, e1 = x, x² = 0
        Algebra::from_constants(f, 2, |i, j, k| i64::from(i + j == k)).unwrap()
    }

    #[test]
    fn dual_numbers_are_associative() {
        let a = dual_numbers(Field::Rationals);
        assert!(assoc_check(a.product()).unwrap().holds());
        assert_eq!(a.unit().unwrap(), a.basis(0));
    }

    #[test]
    fn nonassociative_constants_fail_at_first_triple() {
        // e0e0 = e1, e0e1 = e0, e1ej = 0
        let q = Field::Rationals;
        let c = MultiLinear::from_fn(q, &[2, 2], 2, |t, k| {
            let v = match (t[0], t[1], k) {
                (0, 0, 1) | (0, 1, 0) => 1,
                _ => 0,
            };
            q.from_int(v)
        });
        let v = assoc_check(&c).unwrap();
        let w = v.witness().unwrap();
        // (e0e0)e0 = e1e0 = 0 and e0(e0e0) = e0e1 = e0: first failure at (0,0,0)
        assert_eq!(w.indices, vec![0, 0, 0]);
        assert_eq!(w.lhs, vec![q.zero(), q.zero()]);
        assert_eq!(w.rhs, vec![q.one(), q.zero()]);
        assert!(Algebra::new(c).is_err());
    }

    #[test]
    fn null_product_is_associative() {
        assert!(assoc_check(Algebra::null(Field::Prime(2), 3).product()).unwrap().holds());
    }

    #[test]
    fn shape_mismatch_is_input_error() {
        let q = Field::Rationals;
        let c = MultiLinear::zeros(q, &[2, 3], 2);
        assert!(matches!(assoc_check(&c), Err(Error::Input(_))));
    }

    #[test]
    fn regular_and_dual_bimodules() {
        let a = dual_numbers(Field::Rationals);
        let reg = Bimodule::regular(&a);
        assert!(bimodule_check(&a, reg.left(), reg.right()).unwrap().holds());
        let dual = Bimodule::dual(&a);
        assert!(bimodule_check(&a, dual.left(), dual.right()).unwrap().holds());
    }

    #[test]
    fn zero_left_action_is_still_a_bimodule() {
        // Every axiom side vanishes; the axioms do not ask for 1·m = m.
        let a = dual_numbers(Field::Rationals);
        let zero_left = MultiLinear::zeros(a.field(), &[2, 2], 2);
        assert!(bimodule_check(&a, &zero_left, a.product()).unwrap().holds());
    }

    #[test]
    fn doubled_left_action_fails() {
        // (ab)·m = 2abm but a·(b·m) = 4abm.
        let a = dual_numbers(Field::Rationals);
        let two = a.field().from_int(2);
        let left = a.product().scale(&two);
        let v = bimodule_check(&a, &left, a.product()).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.label, "(ab)·m = a·(b·m)");
        assert_eq!(w.indices, vec![0, 0, 0]);
        assert_eq!(w.lhs, vec![two.clone(), a.field().zero()]);
        assert_eq!(w.rhs, vec![a.field().from_int(4), a.field().zero()]);
        assert_eq!(v.failures.len(), 1);
        assert!(Bimodule::new(&a, left, a.product().clone()).is_err());
    }

    #[test]
    fn semidirect_product_values() {
        let q = Field::Rationals;
        let a = dual_numbers(q);
        let m = Bimodule::regular(&a);
        let s = semidirect(&a, &m).unwrap();
        assert_eq!(s.dim(), 4);
        // (e0, 0) * (0, e0) = (0, e0)
        assert_eq!(s.product().image(&[0, 2]), &[q.zero(), q.zero(), q.one(), q.zero()]);
        for i in 2..4 {
            for j in 2..4 {
                assert!(s.product().image(&[i, j]).iter().all(Scalar::is_zero));
            }
        }
    }

    #[test]
    fn closure_of_identity_graph_fails() {
        let q = Field::Rationals;
        let a = dual_numbers(q);
        let s = semidirect(&a, &Bimodule::regular(&a)).unwrap();
        let sum = DirectSum::new(2, 2);
        let graph: Vec<_> = (0..2).map(|j| sum.join(&a.basis(j), &a.basis(j))).collect();
        match subspace_closed(s.product(), &graph).unwrap() {
            Closure::Escapes { pair, product } => {
                assert_eq!(pair, (0, 0));
                assert_eq!(product, vec![q.one(), q.zero(), q.from_int(2), q.zero()]);
            }
            Closure::Closed => panic!("graph of the identity is not closed"),
        }
        let full: Vec<_> = (0..4).map(|i| basis_vector(q, 4, i)).collect();
        assert!(subspace_closed(s.product(), &full).unwrap().is_closed());
        let dependent = vec![graph[0].clone(), graph[0].clone()];
        assert!(subspace_closed(s.product(), &dependent).is_err());
    }

    #[test]
    fn intertwiner_identity_and_singular() {
        let q = Field::Rationals;
        let a = dual_numbers(q);
        let id = LinearMap::identity(q, 2);
        assert!(intertwiner_check(&id, a.product(), a.product()).unwrap().holds());
        let zero = LinearMap::zero(q, 2, 2);
        assert!(intertwiner_check(&zero, a.product(), a.product()).is_err());
    }

    #[test]
    fn linear_map_inverse_and_compose() {
        let q = Field::Rationals;
        let swap = LinearMap::from_fn(q, 2, 2, |i, j| if i != j { q.one() } else { q.zero() });
        let inv = swap.inverse().unwrap();
        assert_eq!(swap.compose(&inv).unwrap(), LinearMap::identity(q, 2));
    }
}
