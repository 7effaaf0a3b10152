//! Elements of `A⊗A` and `A⊗A⊗A`, the associative Yang-Baxter residual, and
//! the operator `r̃: A* → A` attached to a solution.

use crate::algebra::{Algebra, Bimodule, LinearMap};
use crate::error::{input, Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::tuples;

use super::OperatorInstance;

/// A tensor in `A^{⊗order}`, coefficients stored row-major in the basis `e_{i₁}⊗…⊗e_{i_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    field: Field,
    dim: usize,
    order: usize,
    data: Vec<Scalar>,
}

impl TensorElement {
    pub fn new(field: Field, dim: usize, order: usize, data: Vec<Scalar>) -> Result<Self> {
        if order == 0 {
            return input("tensor order must be positive");
        }
        if data.len() != dim.pow(order as u32) {
            return input(format!(
                "a tensor of order {order} on dim {dim} needs {} coefficients, got {}",
                dim.pow(order as u32),
                data.len()
            ));
        }
        if data.iter().any(|s| !field.owns(s)) {
            return input("tensor coefficients are over a different field");
        }
        Ok(TensorElement { field, dim, order, data })
    }

    pub fn zeros(field: Field, dim: usize, order: usize) -> Self {
        TensorElement { field, dim, order, data: vec![field.zero(); dim.pow(order as u32)] }
    }

    pub fn from_fn(field: Field, dim: usize, order: usize, mut f: impl FnMut(&[usize]) -> Scalar) -> Self {
        let data = tuples(&vec![dim; order]).map(|t| f(&t)).collect();
        TensorElement { field, dim, order, data }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    fn offset(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.order);
        index.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn coeff(&self, index: &[usize]) -> &Scalar {
        &self.data[self.offset(index)]
    }

    fn add_at(&mut self, index: &[usize], value: &Scalar) {
        let o = self.offset(index);
        self.data[o] = &self.data[o] + value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// The first nonzero coefficient index in lexicographic order.
    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        tuples(&vec![self.dim; self.order]).find(|t| !self.coeff(t).is_zero())
    }

    /// `σ(Σ aᵢ⊗bᵢ) = Σ bᵢ⊗aᵢ`; order 2 only.
    pub fn swap(&self) -> Result<TensorElement> {
        if self.order != 2 {
            return input("swap is defined on A⊗A");
        }
        Ok(TensorElement::from_fn(self.field, self.dim, 2, |t| self.coeff(&[t[1], t[0]]).clone()))
    }

    /// Whether `r + σ(r) = 0`.
    pub fn is_skew(&self) -> bool {
        self.order == 2 && tuples(&[self.dim, self.dim]).all(|t| (self.coeff(&t) + self.coeff(&[t[1], t[0]])).is_zero())
    }
}

/// The associative Yang-Baxter residual in `A⊗A⊗A`. For `r = Σ_{pq} r_{pq} e_p⊗e_q`,
///
/// `Σ r_{pq} r_{st} [(e_p e_s)⊗e_t⊗e_q − e_p⊗(e_q e_s)⊗e_t + e_s⊗e_p⊗(e_q e_t)]`.
pub fn aybe_residual(algebra: &Algebra, r: &TensorElement) -> Result<TensorElement> {
    let d = algebra.dim();
    if r.order != 2 || r.dim != d || r.field != algebra.field() {
        return input(format!("r must be an element of A⊗A with dim A = {d} over {}", algebra.field()));
    }
    let c = algebra.product();
    let mut out = TensorElement::zeros(r.field, d, 3);
    for (pq, s_t) in tuples(&[d, d]).flat_map(|pq| tuples(&[d, d]).map(move |st| (pq.clone(), st))) {
        let (p, q, s, t) = (pq[0], pq[1], s_t[0], s_t[1]);
        let w = r.coeff(&[p, q]) * r.coeff(&[s, t]);
        if w.is_zero() {
            continue;
        }
        for (k, ck) in c.image(&[p, s]).iter().enumerate() {
            out.add_at(&[k, t, q], &(&w * ck));
        }
        for (k, ck) in c.image(&[q, s]).iter().enumerate() {
            out.add_at(&[p, k, t], &(-&(&w * ck)));
        }
        for (k, ck) in c.image(&[q, t]).iter().enumerate() {
            out.add_at(&[s, p, k], &(&w * ck));
        }
    }
    Ok(out)
}

/// Builds `r̃: A* → A`, `f ↦ Σ aᵢ f(bᵢ)`, on the dual bimodule.
///
/// In the dual basis `r̃(eᵠ) = Σ_p r_{pq} e_p`. Requires `r` skew-symmetric and
/// a solution of the associative Yang-Baxter equation; the result is GRB.
pub fn r_tilde(algebra: &Algebra, r: &TensorElement) -> Result<OperatorInstance> {
    let residual = aybe_residual(algebra, r)?;
    if !r.is_skew() {
        return Err(Error::Precondition("r is not skew-symmetric".into()));
    }
    if let Some(t) = residual.first_nonzero() {
        return Err(Error::Precondition(format!(
            "r does not solve the associative Yang-Baxter equation: residual at {t:?} is {}",
            residual.coeff(&t)
        )));
    }
    let d = algebra.dim();
    let pi = LinearMap::from_fn(algebra.field(), d, d, |q, p| r.coeff(&[p, q]).clone());
    OperatorInstance::new(algebra.clone(), Bimodule::dual(algebra), pi, None)
}
