//! Generalized and twisted Rota-Baxter operators, Reynolds and associative
//! Nijenhuis operators, their lifts to `A ⊕ M`, and the structure equations.

mod aybe;
mod search;

pub use aybe::{aybe_residual, r_tilde, TensorElement};
pub use search::{search_operators, SearchKind, Solution, DEFAULT_BUDGET};

use crate::algebra::{
    semidirect, subspace_closed, twisted_extension, Algebra, Bimodule, Closure, DirectSum, LinearMap,
};
use crate::cochains::{is_cocycle, Cochain};
use crate::error::{input, Error, Result};
use crate::gerstenhaber::{derived_bracket, g_bracket, postcompose, precompose, MultiMap};
use crate::scalar::{Field, Scalar};
use crate::tensor::{add_vec, sub_vec, tuples, MultiLinear};
use crate::verdict::{first_failure, Verdict, Witness};

/// A linear map `π: M → A`, optionally paired with a Hochschild 2-cocycle `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorInstance {
    algebra: Algebra,
    module: Bimodule,
    pi: LinearMap,
    phi: Option<Cochain>,
}

impl OperatorInstance {
    /// Validates shapes and, when `φ` is given, the cocycle condition.
    pub fn new(algebra: Algebra, module: Bimodule, pi: LinearMap, phi: Option<Cochain>) -> Result<Self> {
        module.ensure_over(&algebra)?;
        check_map(&pi, module.dim(), algebra.dim(), algebra.field(), "π: M → A")?;
        if let Some(phi) = &phi {
            phi.ensure_shape(&algebra, &module, 2)?;
            if let Some(w) = is_cocycle(&algebra, &module, phi)?.witness() {
                return Err(Error::Precondition(format!("φ is not a Hochschild 2-cocycle: {w}")));
            }
        }
        Ok(OperatorInstance { algebra, module, pi, phi })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn module(&self) -> &Bimodule {
        &self.module
    }

    pub fn pi(&self) -> &LinearMap {
        &self.pi
    }

    pub fn phi(&self) -> Option<&Cochain> {
        self.phi.as_ref()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn sum(&self) -> DirectSum {
        DirectSum::new(self.algebra.dim(), self.module.dim())
    }

    /// The same pair and cocycle with a different operator.
    pub fn with_pi(&self, pi: LinearMap) -> Result<Self> {
        check_map(&pi, self.module.dim(), self.algebra.dim(), self.field(), "π: M → A")?;
        Ok(OperatorInstance { pi, ..self.clone() })
    }

    /// Drops `φ`, keeping the pair and operator.
    pub fn without_phi(&self) -> Self {
        OperatorInstance { phi: None, ..self.clone() }
    }
}

pub(crate) fn check_map(map: &LinearMap, source: usize, target: usize, field: Field, what: &str) -> Result<()> {
    if map.field() != field {
        return input(format!("{what} is over {}, expected {field}", map.field()));
    }
    if map.source_dim() != source || map.target_dim() != target {
        return input(format!("{what} must be {source}→{target}, got {}→{}", map.source_dim(), map.target_dim()));
    }
    Ok(())
}

/// `π(m)π(n) = π(π(m)·n + m·π(n) + φ(π(m), π(n)))` on basis pairs of `M`.
pub(crate) fn trb_failure(
    algebra: &Algebra,
    module: &Bimodule,
    pi: &LinearMap,
    phi: Option<&Cochain>,
    label: &str,
) -> Option<Witness> {
    let d = module.dim();
    first_failure(label, tuples(&[d, d]), |t| {
        let (pm, pn) = (pi.image(t[0]), pi.image(t[1]));
        let lhs = algebra.mul(pm, pn);
        let mut inner = add_vec(&module.act_left(pm, &module.basis(t[1])), &module.act_right(&module.basis(t[0]), pn));
        if let Some(phi) = phi {
            inner = add_vec(&inner, &phi.apply(&[pm, pn]));
        }
        (lhs, pi.apply(&inner))
    })
}

const GRB_LABEL: &str = "π(m)π(n) = π(π(m)·n + m·π(n))";
const TRB_LABEL: &str = "π(m)π(n) = π(π(m)·n + m·π(n)) + πφ(π(m), π(n))";

/// Checks the generalized Rota-Baxter identity; the instance must not carry `φ`.
pub fn is_grb(inst: &OperatorInstance) -> Result<Verdict> {
    if inst.phi.is_some() {
        return input("is_grb takes an instance without φ; use is_trb");
    }
    Ok(Verdict::from_option(trb_failure(&inst.algebra, &inst.module, &inst.pi, None, GRB_LABEL)))
}

/// Checks the twisted Rota-Baxter identity; the instance must carry `φ`.
pub fn is_trb(inst: &OperatorInstance) -> Result<Verdict> {
    let Some(phi) = &inst.phi else {
        return input("is_trb needs a cocycle φ; use is_grb");
    };
    Ok(Verdict::from_option(trb_failure(&inst.algebra, &inst.module, &inst.pi, Some(phi), TRB_LABEL)))
}

/// Dispatches to [`is_trb`] or [`is_grb`] depending on whether `φ` is present.
pub fn check_operator(inst: &OperatorInstance) -> Result<Verdict> {
    if inst.phi.is_some() {
        is_trb(inst)
    } else {
        is_grb(inst)
    }
}

fn check_endomorphism(algebra: &Algebra, map: &LinearMap, what: &str) -> Result<()> {
    check_map(map, algebra.dim(), algebra.dim(), algebra.field(), what)
}

/// The weight-zero Rota-Baxter identity `β(x)β(y) = β(β(x)y + xβ(y))`.
pub fn is_rota_baxter(algebra: &Algebra, beta: &LinearMap) -> Result<Verdict> {
    check_endomorphism(algebra, beta, "β")?;
    Ok(Verdict::from_option(rb_failure(algebra, beta)))
}

pub(crate) fn rb_failure(algebra: &Algebra, beta: &LinearMap) -> Option<Witness> {
    let d = algebra.dim();
    first_failure("β(x)β(y) = β(β(x)y + xβ(y))", tuples(&[d, d]), |t| {
        let (bx, by) = (beta.image(t[0]), beta.image(t[1]));
        let lhs = algebra.mul(bx, by);
        let inner = add_vec(&algebra.mul(bx, &algebra.basis(t[1])), &algebra.mul(&algebra.basis(t[0]), by));
        (lhs, beta.apply(&inner))
    })
}

/// `R(a)R(b) = R(R(a)b + aR(b)) − R(R(a)R(b))`.
pub fn is_reynolds(algebra: &Algebra, r: &LinearMap) -> Result<Verdict> {
    check_endomorphism(algebra, r, "R")?;
    Ok(Verdict::from_option(reynolds_failure(algebra, r)))
}

pub(crate) fn reynolds_failure(algebra: &Algebra, r: &LinearMap) -> Option<Witness> {
    let d = algebra.dim();
    first_failure("R(a)R(b) = R(R(a)b + aR(b)) − R(R(a)R(b))", tuples(&[d, d]), |t| {
        let (ra, rb) = (r.image(t[0]), r.image(t[1]));
        let lhs = algebra.mul(ra, rb);
        let inner = add_vec(&algebra.mul(ra, &algebra.basis(t[1])), &algebra.mul(&algebra.basis(t[0]), rb));
        (lhs.clone(), r.apply(&sub_vec(&inner, &lhs)))
    })
}

/// `N(x)N(y) = N(N(x)y + xN(y)) − N(N(xy))`.
pub fn is_nijenhuis(algebra: &Algebra, n: &LinearMap) -> Result<Verdict> {
    check_endomorphism(algebra, n, "N")?;
    Ok(Verdict::from_option(nijenhuis_failure(algebra, n)))
}

pub(crate) fn nijenhuis_failure(algebra: &Algebra, n: &LinearMap) -> Option<Witness> {
    let d = algebra.dim();
    first_failure("N(x)N(y) = N(N(x)y + xN(y)) − N(N(xy))", tuples(&[d, d]), |t| {
        let (nx, ny) = (n.image(t[0]), n.image(t[1]));
        let lhs = algebra.mul(nx, ny);
        let inner = add_vec(&algebra.mul(nx, &algebra.basis(t[1])), &algebra.mul(&algebra.basis(t[0]), ny));
        let xy = algebra.product().image(&[t[0], t[1]]);
        let nnxy = n.apply(&n.apply(xy));
        (lhs, sub_vec(&n.apply(&inner), &nnxy))
    })
}

/// The lift `π̂(a, m) = (π(m), 0)` on `A ⊕ M`.
pub fn lift_pi(inst: &OperatorInstance) -> MultiMap {
    let sum = inst.sum();
    let f = inst.field();
    MultiMap::from_images(f, sum.dim(), 1, |t| {
        let mut out = vec![f.zero(); sum.dim()];
        if t[0] >= sum.a {
            out[..sum.a].clone_from_slice(inst.pi.image(t[0] - sum.a));
        }
        out
    })
}

/// The lift `φ̂((a,0),(b,0)) = (0, φ(a,b))`, zero whenever an input lies in `M`.
pub fn lift_phi(inst: &OperatorInstance) -> Result<MultiMap> {
    let Some(phi) = &inst.phi else {
        return input("lift_phi needs a cocycle φ");
    };
    let sum = inst.sum();
    let f = inst.field();
    Ok(MultiMap::from_images(f, sum.dim(), 2, |t| {
        let mut out = vec![f.zero(); sum.dim()];
        if t[0] < sum.a && t[1] < sum.a {
            out[sum.a..].clone_from_slice(phi.tensor().image(t));
        }
        out
    }))
}

/// The semidirect product `μ̂` of `A ⊕₀ M` as an arity-2 map.
pub fn mu_hat(inst: &OperatorInstance) -> Result<MultiMap> {
    MultiMap::new(semidirect(&inst.algebra, &inst.module)?.product().clone())
}

/// `μ̂ + φ̂`, or `μ̂` when the instance has no `φ`.
pub fn theta(inst: &OperatorInstance) -> Result<MultiMap> {
    let mu = mu_hat(inst)?;
    match inst.phi {
        Some(_) => mu.add(&lift_phi(inst)?),
        None => Ok(mu),
    }
}

/// Whether `π̂` is a classical Rota-Baxter operator on `A ⊕₀ M`.
pub fn lift_is_rota_baxter(inst: &OperatorInstance) -> Result<Verdict> {
    let s = semidirect(&inst.algebra, &inst.module)?;
    let beta = LinearMap::new(lift_pi(inst).tensor().clone())?;
    is_rota_baxter(&s, &beta)
}

/// The pieces of the structure equation for `π` (and `φ`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureResidual {
    /// `½[π̂, π̂]_μ̂`.
    pub half_bracket: MultiMap,
    /// `[[[φ̂, π̂], π̂], π̂]`, when `φ` is present.
    pub triple: Option<MultiMap>,
    /// `π̂ ∘ φ̂ ∘ (π̂ ⊗ π̂)`, when `φ` is present.
    pub pi_phi_pi_pi: Option<MultiMap>,
    /// `½[π̂, π̂]_μ̂ + (1/6)[[[φ̂, π̂], π̂], π̂]`.
    pub residual: MultiMap,
}

impl StructureResidual {
    pub fn is_zero(&self) -> bool {
        self.residual.is_zero()
    }

    /// `π̂φ̂(π̂ ⊗ π̂) = −(1/6)[[[φ̂, π̂], π̂], π̂]`; trivially true without `φ`.
    pub fn intermediate_identity_holds(&self) -> bool {
        match (&self.triple, &self.pi_phi_pi_pi) {
            (Some(triple), Some(ppp)) => {
                let f = triple.field();
                let sixth = f.from_ratio(-1, 6).expect("6 is invertible here");
                ppp == &triple.scale(&sixth)
            }
            _ => true,
        }
    }
}

/// Computes the structure residual, which vanishes exactly when `π` is GRB
/// (no `φ`) or `φ`-twisted Rota-Baxter.
pub fn structure_residual(inst: &OperatorInstance) -> Result<StructureResidual> {
    let f = inst.field();
    match inst.phi {
        Some(_) => f.require_inverses_up_to(3, "the twisted structure equation")?,
        None => f.require_inverses_up_to(2, "the structure equation")?,
    }
    let mu = mu_hat(inst)?;
    let pi = lift_pi(inst);
    let half = f.from_ratio(1, 2)?;
    let half_bracket = derived_bracket(&pi, &pi, &mu)?.scale(&half);
    if inst.phi.is_none() {
        return Ok(StructureResidual {
            residual: half_bracket.clone(),
            half_bracket,
            triple: None,
            pi_phi_pi_pi: None,
        });
    }
    let phi = lift_phi(inst)?;
    let triple = g_bracket(&g_bracket(&g_bracket(&phi, &pi)?, &pi)?, &pi)?;
    let ppp = postcompose(&pi, &precompose(&phi, &[&pi, &pi])?)?;
    let residual = half_bracket.add(&triple.scale(&f.from_ratio(1, 6)?))?;
    Ok(StructureResidual { half_bracket, triple: Some(triple), pi_phi_pi_pi: Some(ppp), residual })
}

/// The graph `L_π = {(π(m), m)}` as basis vectors of `A ⊕ M`.
pub fn graph_basis(inst: &OperatorInstance) -> Vec<Vec<Scalar>> {
    let sum = inst.sum();
    (0..inst.module.dim()).map(|j| sum.join(inst.pi.image(j), &inst.module.basis(j))).collect()
}

/// The product of `A ⊕_φ M` (or `A ⊕₀ M` without `φ`) as raw structure constants.
pub fn extension(inst: &OperatorInstance) -> Result<MultiLinear> {
    match &inst.phi {
        Some(phi) => twisted_extension(&inst.algebra, &inst.module, phi),
        None => Ok(semidirect(&inst.algebra, &inst.module)?.product().clone()),
    }
}

/// Whether the graph of `π` is a subalgebra of the (twisted) extension.
pub fn graph_check(inst: &OperatorInstance) -> Result<Closure> {
    subspace_closed(&extension(inst)?, &graph_basis(inst))
}
