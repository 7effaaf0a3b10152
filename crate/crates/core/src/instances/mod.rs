//! Concrete algebras, bimodules and operators, including truncations of the
//! integral operator on polynomials and the Weyl algebra.

pub mod weyl;

use crate::algebra::{Algebra, Bimodule, LinearMap};
use crate::cochains::{coboundary, Cochain};
use crate::error::{input, Error, Result};
use crate::operators::OperatorInstance;
use crate::scalar::{Field, Scalar};
use crate::tensor::{tuples, MultiLinear};
use crate::verdict::first_failure;

pub use weyl::{TruncatedWeyl, WeylPoly, WindowReport};

/// Names accepted by [`algebra`].
pub const ALGEBRAS: &[&str] = &["dual_numbers", "null1", "unit1", "null2", "row2", "diag2"];

/// Small algebras used throughout the tests and the CLI catalog.
///
/// - `dual_numbers`: `k[x]/(x²)` with `e₀ = 1`, `e₁ = x`
/// - `null1`, `null2`: zero product
/// - `unit1`: the field itself
/// - `row2`: `e₀e₀ = e₀`, `e₀e₁ = e₁`, other products zero
/// - `diag2`: `k × k`
pub fn algebra(name: &str, field: Field) -> Result<Algebra> {
    let (dim, c): (usize, fn(usize, usize, usize) -> i64) = match name {
        "dual_numbers" => (2, |i, j, k| i64::from(i + j == k)),
        "null1" => (1, |_, _, _| 0),
        "unit1" => (1, |_, _, _| 1),
        "null2" => (2, |_, _, _| 0),
        "row2" => (2, |i, j, k| i64::from(i == 0 && j == k)),
        "diag2" => (2, |i, j, k| i64::from(i == j && j == k)),
        _ => return input(format!("unknown catalog algebra {name:?}; known: {}", ALGEBRAS.join(", "))),
    };
    Algebra::from_constants(field, dim, c)
}

/// The regular bimodule, or the dual bimodule when `dual` is set.
pub fn module(algebra: &Algebra, dual: bool) -> Bimodule {
    if dual {
        Bimodule::dual(algebra)
    } else {
        Bimodule::regular(algebra)
    }
}

/// Multiplication by `x` on `k[x]/(x²)`, a Rota-Baxter operator.
pub fn times_x(field: Field) -> Result<OperatorInstance> {
    let a = algebra("dual_numbers", field)?;
    let pi = LinearMap::from_fn(field, 2, 2, |i, k| if i == 0 && k == 1 { field.one() } else { field.zero() });
    OperatorInstance::new(a.clone(), Bimodule::regular(&a), pi, None)
}

/// `M = A⊗A` with `a·(u⊗v) = (au)⊗v`, `(u⊗v)·b = u⊗(vb)`. Basis `e_u⊗e_v` has index `u·dim + v`.
pub fn tensor_square_module(algebra: &Algebra) -> Result<Bimodule> {
    let d = algebra.dim();
    if d > 3 {
        return Err(Error::Capacity(format!("A⊗A has dimension {} (cap 9)", d * d)));
    }
    let f = algebra.field();
    let c = algebra.product();
    let left = MultiLinear::from_fn(f, &[d, d * d], d * d, |t, out| {
        let (u, v) = (t[1] / d, t[1] % d);
        let (k, w) = (out / d, out % d);
        if w == v {
            c.entry(&[t[0], u], k).clone()
        } else {
            f.zero()
        }
    });
    let right = MultiLinear::from_fn(f, &[d * d, d], d * d, |t, out| {
        let (u, v) = (t[0] / d, t[0] % d);
        let (w, k) = (out / d, out % d);
        if w == u {
            c.entry(&[v, t[1]], k).clone()
        } else {
            f.zero()
        }
    });
    Bimodule::new(algebra, left, right)
}

/// `μ: A⊗A → A` as a twisted Rota-Baxter operator with `φ(a, b) = −a⊗b`.
pub fn tensor_square(algebra: &Algebra) -> Result<OperatorInstance> {
    let d = algebra.dim();
    let f = algebra.field();
    let m = tensor_square_module(algebra)?;
    let pi = LinearMap::from_fn(f, d * d, d, |uv, k| algebra.product().entry(&[uv / d, uv % d], k).clone());
    let phi = Cochain::from_fn(algebra, &m, 2, |t| {
        (0..d * d).map(|k| if k == t[0] * d + t[1] { -f.one() } else { f.zero() }).collect()
    });
    OperatorInstance::new(algebra.clone(), m, pi, Some(phi))
}

/// A unital `A`, an `A`-linear map `f: M → A` and `e` with `f(e) = 1` give a
/// twisted Rota-Baxter operator `f` with `φ(a, b) = −a·e·b`.
pub fn unit_section(algebra: &Algebra, module: &Bimodule, f: &LinearMap, e: &[Scalar]) -> Result<OperatorInstance> {
    module.ensure_over(algebra)?;
    crate::operators::check_map(f, module.dim(), algebra.dim(), algebra.field(), "f: M → A")?;
    if e.len() != module.dim() {
        return input(format!("e must have {} coordinates", module.dim()));
    }
    let Some(unit) = algebra.unit() else {
        return Err(Error::Precondition("the algebra has no unit".into()));
    };
    if f.apply(e) != unit {
        return Err(Error::Precondition("f(e) ≠ 1".into()));
    }
    let (da, dm) = (algebra.dim(), module.dim());
    let linear = first_failure("f(a·m) = a·f(m)", tuples(&[da, dm]), |t| {
        (f.apply(module.left().image(t)), algebra.mul(&algebra.basis(t[0]), f.image(t[1])))
    })
    .or_else(|| {
        first_failure("f(m·a) = f(m)·a", tuples(&[dm, da]), |t| {
            (f.apply(module.right().image(t)), algebra.mul(f.image(t[0]), &algebra.basis(t[1])))
        })
    });
    if let Some(w) = linear {
        return Err(Error::Precondition(format!("f is not A-linear: {w}")));
    }
    let phi = Cochain::from_fn(algebra, module, 2, |t| {
        let ae = module.act_left(&algebra.basis(t[0]), e);
        module.act_right(&ae, &algebra.basis(t[1])).into_iter().map(|s| -s).collect()
    });
    OperatorInstance::new(algebra.clone(), module.clone(), f.clone(), Some(phi))
}

/// For an invertible 1-cochain `ω: A → M`, the inverse `ω⁻¹: M → A` is twisted
/// Rota-Baxter with `φ = −∂ω`.
pub fn invertible_cochain(algebra: &Algebra, module: &Bimodule, omega: &LinearMap) -> Result<OperatorInstance> {
    crate::operators::check_map(omega, algebra.dim(), module.dim(), algebra.field(), "ω: A → M")?;
    let Some(pi) = omega.inverse() else {
        return Err(Error::Precondition("ω is not invertible".into()));
    };
    let d = coboundary(algebra, module, &Cochain::from_linear(omega))?;
    let phi = d.scale(&-algebra.field().one());
    OperatorInstance::new(algebra.clone(), module.clone(), pi, Some(phi))
}

/// `R: A → A` on the regular bimodule with `φ = −μ`; twisted Rota-Baxter
/// exactly when `R` is a Reynolds operator.
pub fn reynolds_as_trb(algebra: &Algebra, r: &LinearMap) -> Result<OperatorInstance> {
    let m = Bimodule::regular(algebra);
    let phi = Cochain::new(algebra, &m, algebra.product().scale(&-algebra.field().one()))?;
    OperatorInstance::new(algebra.clone(), m, r.clone(), Some(phi))
}

/// The swap `e₀ ↔ e₁` on `k[x]/(x²)`, used as an invertible 1-cochain.
pub fn swap_omega(field: Field) -> LinearMap {
    LinearMap::from_fn(field, 2, 2, |i, k| if i != k { field.one() } else { field.zero() })
}

/// Names accepted by [`trb_instance`].
pub const TRB_INSTANCES: &[&str] =
    &["mu_as_trb", "invertible_omega", "unit_section_tensor", "unit_section_identity", "reynolds_identity"];

/// The twisted Rota-Baxter catalog, all on `k[x]/(x²)`.
pub fn trb_instance(name: &str, field: Field) -> Result<OperatorInstance> {
    let a = algebra("dual_numbers", field)?;
    match name {
        "mu_as_trb" => tensor_square(&a),
        "invertible_omega" => invertible_cochain(&a, &Bimodule::regular(&a), &swap_omega(field)),
        "unit_section_tensor" => {
            let m = tensor_square_module(&a)?;
            let mu = LinearMap::from_fn(field, 4, 2, |uv, k| a.product().entry(&[uv / 2, uv % 2], k).clone());
            let mut e = vec![field.zero(); 4];
            e[0] = field.one();
            unit_section(&a, &m, &mu, &e)
        }
        "unit_section_identity" => {
            unit_section(&a, &Bimodule::regular(&a), &LinearMap::identity(field, 2), &a.basis(0))
        }
        "reynolds_identity" => reynolds_as_trb(&a, &LinearMap::identity(field, 2)),
        _ => input(format!("unknown TRB instance {name:?}; known: {}", TRB_INSTANCES.join(", "))),
    }
}

/// `A = span{x, …, x^N}` modulo `x^{N+1}`, `M = span{1, …, x^{N−1}}` modulo
/// `x^N`, the integral `π = ∫` and the derivative `Ω = d/dx`.
///
/// Basis index `i` of `A` is `x^{i+1}`; basis index `j` of `M` is `x^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    pub degree: usize,
    pub instance: OperatorInstance,
    pub omega: LinearMap,
}

impl TruncatedPolynomial {
    pub fn algebra(&self) -> &Algebra {
        self.instance.algebra()
    }

    pub fn module(&self) -> &Bimodule {
        self.instance.module()
    }

    /// `π∘Ω`, an associative Nijenhuis operator on `A`.
    pub fn pi_omega(&self) -> LinearMap {
        self.instance.pi().compose(&self.omega).expect("shapes agree")
    }
}

pub fn truncated_polynomial(field: Field, degree: usize) -> Result<TruncatedPolynomial> {
    if degree < 3 {
        return input("truncated_polynomial needs N ≥ 3");
    }
    field.require_inverses_up_to(degree as u64, "the integral on truncated polynomials")?;
    let n = degree;
    let labels_a = (1..=n).map(|i| format!("x^{i}")).collect();
    let a = Algebra::new(MultiLinear::from_fn(field, &[n, n], n, |t, k| {
        // x^{t0+1} x^{t1+1} = x^{t0+t1+2}
        if t[0] + t[1] + 1 == k {
            field.one()
        } else {
            field.zero()
        }
    }))?
    .with_labels(labels_a)?;
    let act = |deg_a: usize, j: usize, k: usize| if deg_a + j == k { field.one() } else { field.zero() };
    let left = MultiLinear::from_fn(field, &[n, n], n, |t, k| act(t[0] + 1, t[1], k));
    let right = MultiLinear::from_fn(field, &[n, n], n, |t, k| act(t[1] + 1, t[0], k));
    let m = Bimodule::new(&a, left, right)?;
    let pi = LinearMap::from_fn(field, n, n, |j, i| {
        if i == j {
            field.from_ratio(1, j as i64 + 1).expect("checked characteristic")
        } else {
            field.zero()
        }
    });
    let omega =
        LinearMap::from_fn(field, n, n, |i, j| if i == j { field.from_int(i as i64 + 1) } else { field.zero() });
    let instance = OperatorInstance::new(a, m, pi, None)?;
    Ok(TruncatedPolynomial { degree, instance, omega })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochains::is_cocycle;
    use crate::operators::{is_grb, is_nijenhuis, is_reynolds, is_trb};
    use crate::structures::derivation_dual;

    #[test]
    fn catalog_algebras_build() {
        for f in [Field::Rationals, Field::Prime(2), Field::Prime(3)] {
            for name in ALGEBRAS {
                let a = algebra(name, f).unwrap();
                let _ = module(&a, true);
            }
        }
        assert!(algebra("nope", Field::Rationals).is_err());
    }

    #[test]
    fn trb_catalog_holds() {
        for name in TRB_INSTANCES {
            let inst = trb_instance(name, Field::Rationals).unwrap();
            let phi = inst.phi().unwrap();
            assert!(is_cocycle(inst.algebra(), inst.module(), phi).unwrap().holds(), "{name}");
            assert!(is_trb(&inst).unwrap().holds(), "{name}");
        }
    }

    #[test]
    fn tensor_square_pair_of_units() {
        // π(1⊗1)π(1⊗1) = 1 and μ(1⊗1 + 1⊗1) + μ(−1⊗1) = 1.
        let q = Field::Rationals;
        let inst = trb_instance("mu_as_trb", q).unwrap();
        let one = inst.pi().image(0).to_vec();
        assert_eq!(one, vec![q.one(), q.zero()]);
        assert_eq!(inst.algebra().mul(&one, &one), vec![q.one(), q.zero()]);
    }

    #[test]
    fn unit_section_identity_is_reynolds() {
        let q = Field::Rationals;
        let a = algebra("dual_numbers", q).unwrap();
        let inst = trb_instance("unit_section_identity", q).unwrap();
        assert_eq!(inst, reynolds_as_trb(&a, &LinearMap::identity(q, 2)).unwrap());
        assert!(is_reynolds(&a, inst.pi()).unwrap().holds());
    }

    #[test]
    fn unit_section_rejects_non_linear_f() {
        let q = Field::Rationals;
        let a = algebra("dual_numbers", q).unwrap();
        let f = LinearMap::from_fn(q, 2, 2, |i, k| if i == k || (i == 1 && k == 0) { q.one() } else { q.zero() });
        let err = unit_section(&a, &Bimodule::regular(&a), &f, &a.basis(0)).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn integral_of_degree_three() {
        let q = Field::Rationals;
        let tp = truncated_polynomial(q, 3).unwrap();
        let pi = tp.instance.pi();
        // π(1) = x, π(x) = x²/2, π(x²) = x³/3
        assert_eq!(pi.image(0), &[q.one(), q.zero(), q.zero()]);
        assert_eq!(pi.image(1), &[q.zero(), q.from_ratio(1, 2).unwrap(), q.zero()]);
        assert_eq!(pi.image(2), &[q.zero(), q.zero(), q.from_ratio(1, 3).unwrap()]);
        assert!(is_grb(&tp.instance).unwrap().holds());
        assert!(tp.omega.compose(pi).unwrap() == LinearMap::identity(q, 3));
        assert!(pi.compose(&tp.omega).unwrap() == LinearMap::identity(q, 3));
        let dual = derivation_dual(&tp.instance, &tp.omega, &q.one()).unwrap();
        assert!(is_grb(&dual).unwrap().holds());
        assert!(is_nijenhuis(tp.algebra(), &tp.pi_omega()).unwrap().holds());
    }

    #[test]
    fn integral_needs_characteristic() {
        assert!(matches!(truncated_polynomial(Field::Prime(3), 3), Err(Error::Characteristic { .. })));
        assert!(truncated_polynomial(Field::Prime(5), 4).is_ok());
    }
}
