//! Hochschild cochains `Cⁿ(A, M)` and the coboundary map.

use crate::algebra::{Algebra, Bimodule, LinearMap};
use crate::error::{input, Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{axpy, MultiLinear};
use crate::verdict::{Verdict, Witness};

/// Largest arity any cochain or multilinear map may have.
pub const ARITY_CAP: usize = 4;

/// A multilinear map `Aⁿ → M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    tensor: MultiLinear,
}

impl Cochain {
    /// Wraps a tensor of shape `dim_A^n → dim_M` for the given pair.
    pub fn new(algebra: &Algebra, module: &Bimodule, tensor: MultiLinear) -> Result<Self> {
        let c = Cochain { tensor };
        c.ensure_shape(algebra, module, c.arity())?;
        Ok(c)
    }

    pub fn zero(algebra: &Algebra, module: &Bimodule, arity: usize) -> Self {
        Cochain { tensor: MultiLinear::zeros(algebra.field(), &vec![algebra.dim(); arity], module.dim()) }
    }

    /// A linear map `A → M` as a 1-cochain.
    pub fn from_linear(map: &LinearMap) -> Self {
        Cochain { tensor: map.matrix().clone() }
    }

    pub fn from_fn(algebra: &Algebra, module: &Bimodule, arity: usize, f: impl FnMut(&[usize]) -> Vec<Scalar>) -> Self {
        Cochain { tensor: MultiLinear::from_images(algebra.field(), &vec![algebra.dim(); arity], module.dim(), f) }
    }

    pub fn arity(&self) -> usize {
        self.tensor.arity()
    }

    pub fn tensor(&self) -> &MultiLinear {
        &self.tensor
    }

    pub fn apply(&self, args: &[&[Scalar]]) -> Vec<Scalar> {
        self.tensor.apply(args)
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> Cochain {
        Cochain { tensor: self.tensor.scale(s) }
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        Ok(Cochain { tensor: self.tensor.try_add(&other.tensor)? })
    }

    pub(crate) fn ensure_shape(&self, algebra: &Algebra, module: &Bimodule, arity: usize) -> Result<()> {
        module.ensure_over(algebra)?;
        let t = &self.tensor;
        if t.field() != algebra.field() {
            return input("cochain and algebra are over different fields");
        }
        if t.arity() != arity || t.input_dims().iter().any(|&d| d != algebra.dim()) || t.output_dim() != module.dim() {
            return input(format!(
                "expected a {arity}-cochain of shape {}^{arity}→{}, got {:?}→{}",
                algebra.dim(),
                module.dim(),
                t.input_dims(),
                t.output_dim()
            ));
        }
        if arity == 0 || arity > ARITY_CAP {
            return Err(Error::Capacity(format!("cochain arity {arity} outside 1..={ARITY_CAP}")));
        }
        Ok(())
    }
}

/// The Hochschild coboundary
///
/// `(∂φ)(a₁,…,a_{n+1}) = a₁·φ(a₂,…) + Σᵢ (−1)ⁱ φ(…, aᵢa_{i+1}, …) + (−1)^{n+1} φ(a₁,…,a_n)·a_{n+1}`.
pub fn coboundary(algebra: &Algebra, module: &Bimodule, phi: &Cochain) -> Result<Cochain> {
    let n = phi.arity();
    phi.ensure_shape(algebra, module, n)?;
    if n + 1 > ARITY_CAP {
        return Err(Error::Capacity(format!("coboundary of a {n}-cochain exceeds the arity cap {ARITY_CAP}")));
    }
    let f = algebra.field();
    let one = f.one();
    let minus_one = -&one;
    let dim_a = algebra.dim();
    let tensor = MultiLinear::from_images(f, &vec![dim_a; n + 1], module.dim(), |t| {
        let mut out = module.zero_vec();
        // a₁ · φ(a₂, …)
        axpy(&mut out, &one, &module.act_left(&algebra.basis(t[0]), phi.tensor.image(&t[1..])));
        // Σ (−1)^i φ(a₁, …, aᵢ a_{i+1}, …)
        for i in 1..=n {
            let sign = if i % 2 == 0 { &one } else { &minus_one };
            let prod = algebra.product().image(&[t[i - 1], t[i]]);
            for (k, c) in prod.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut args: Vec<usize> = t[..i - 1].to_vec();
                args.push(k);
                args.extend_from_slice(&t[i + 1..]);
                axpy(&mut out, &(sign * c), phi.tensor.image(&args));
            }
        }
        // (−1)^{n+1} φ(a₁, …, a_n) · a_{n+1}
        let sign = if (n + 1).is_multiple_of(2) { &one } else { &minus_one };
        axpy(&mut out, sign, &module.act_right(phi.tensor.image(&t[..n]), &algebra.basis(t[n])));
        out
    });
    Ok(Cochain { tensor })
}

/// Whether `∂φ = 0`; the witness is the first basis tuple where `∂φ` is nonzero.
pub fn is_cocycle(algebra: &Algebra, module: &Bimodule, phi: &Cochain) -> Result<Verdict> {
    let d = coboundary(algebra, module, phi)?;
    Ok(Verdict::from_option(d.tensor.first_nonzero().map(|t| {
        let lhs = d.tensor.image(&t).to_vec();
        Witness::new("cocycle condition ∂φ = 0", t, lhs, module.zero_vec())
    })))
}
