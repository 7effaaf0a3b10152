//! Exhaustive enumeration of operators over a prime field.

use rayon::prelude::*;

use crate::algebra::{Algebra, Bimodule, LinearMap};
use crate::cochains::{is_cocycle, Cochain};
use crate::error::{input, Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::MultiLinear;

use super::aybe::{aybe_residual, TensorElement};
use super::{nijenhuis_failure, rb_failure, reynolds_failure, trb_failure};

/// Largest candidate count a search may visit unless the caller raises it.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Which identity a search enumerates solutions of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchKind {
    /// Generalized Rota-Baxter maps `M → A`.
    Grb,
    /// Weight-zero Rota-Baxter endomorphisms of `A`.
    Rb,
    /// Twisted Rota-Baxter maps `M → A` for the given 2-cocycle.
    Trb(Cochain),
    Reynolds,
    Nijenhuis,
    /// Solutions `r ∈ A⊗A` of the associative Yang-Baxter equation.
    Aybe,
}

/// One solution found by [`search_operators`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Map(LinearMap),
    Tensor(TensorElement),
}

impl Solution {
    /// Flattened coefficients in enumeration order.
    pub fn coefficients(&self) -> &[Scalar] {
        match self {
            Solution::Map(m) => m.matrix().data(),
            Solution::Tensor(t) => t.data(),
        }
    }
}

/// Enumerates every candidate over `𝔽_p` and keeps those satisfying `kind`.
///
/// Candidates are ordered lexicographically by their flattened coefficients
/// (matrix rows indexed by the source basis), first entry most significant.
/// For kinds that only involve `A`, the module is ignored.
pub fn search_operators(algebra: &Algebra, module: &Bimodule, kind: &SearchKind, budget: u64) -> Result<Vec<Solution>> {
    let field = algebra.field();
    let Field::Prime(p) = field else {
        return input("exhaustive search needs a prime field");
    };
    let da = algebra.dim();
    let (source, target) = match kind {
        SearchKind::Grb | SearchKind::Trb(_) => {
            module.ensure_over(algebra)?;
            (module.dim(), da)
        }
        _ => (da, da),
    };
    if let SearchKind::Trb(phi) = kind {
        phi.ensure_shape(algebra, module, 2)?;
        if let Some(w) = is_cocycle(algebra, module, phi)?.witness() {
            return Err(Error::Precondition(format!("φ is not a Hochschild 2-cocycle: {w}")));
        }
    }
    let entries = (source * target) as u32;
    let total = p
        .checked_pow(entries)
        .filter(|&n| n <= budget)
        .ok_or_else(|| Error::Capacity(format!("{p}^{entries} candidates exceed the search budget of {budget}")))?;

    let decode = |index: u64| -> Vec<Scalar> {
        let mut digits = vec![0i64; entries as usize];
        let mut rest = index;
        for d in digits.iter_mut().rev() {
            *d = (rest % p) as i64;
            rest /= p;
        }
        digits.into_iter().map(|d| field.from_int(d)).collect()
    };
    let regular;
    let module = match kind {
        SearchKind::Rb => {
            regular = Bimodule::regular(algebra);
            &regular
        }
        _ => module,
    };

    let mut found: Vec<(u64, Solution)> = (0..total)
        .into_par_iter()
        .filter_map(|index| {
            let data = decode(index);
            let solution = if let SearchKind::Aybe = kind {
                let r = TensorElement::new(field, da, 2, data).expect("shape fixed by construction");
                let ok = aybe_residual(algebra, &r).expect("shape fixed by construction").is_zero();
                ok.then_some(Solution::Tensor(r))
            } else {
                let matrix =
                    MultiLinear::from_flat(field, &[source], target, data).expect("shape fixed by construction");
                let map = LinearMap::new(matrix).expect("shape fixed by construction");
                let failure = match kind {
                    SearchKind::Grb => trb_failure(algebra, module, &map, None, ""),
                    SearchKind::Trb(phi) => trb_failure(algebra, module, &map, Some(phi), ""),
                    SearchKind::Rb => rb_failure(algebra, &map),
                    SearchKind::Reynolds => reynolds_failure(algebra, &map),
                    SearchKind::Nijenhuis => nijenhuis_failure(algebra, &map),
                    SearchKind::Aybe => unreachable!(),
                };
                failure.is_none().then_some(Solution::Map(map))
            };
            solution.map(|s| (index, s))
        })
        .collect();
    found.sort_by_key(|(index, _)| *index);
    Ok(found.into_iter().map(|(_, s)| s).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn maps(solutions: Vec<Solution>) -> Vec<Vec<Scalar>> {
        solutions.iter().map(|s| s.coefficients().to_vec()).collect()
    }

    #[test]
    fn null_algebra_of_dim_one() {
        let f2 = Field::Prime(2);
        let a = Algebra::null(f2, 1);
        let m = Bimodule::regular(&a);
        let found = maps(search_operators(&a, &m, &SearchKind::Grb, DEFAULT_BUDGET).unwrap());
        assert_eq!(found, vec![vec![f2.zero()], vec![f2.one()]]);
    }

    #[test]
    fn unital_dim_one_has_only_zero() {
        for p in [2, 3, 5] {
            let f = Field::Prime(p);
            let a = Algebra::from_constants(f, 1, |_, _, _| 1).unwrap();
            let m = Bimodule::regular(&a);
            let found = maps(search_operators(&a, &m, &SearchKind::Grb, DEFAULT_BUDGET).unwrap());
            assert_eq!(found, vec![vec![f.zero()]], "p = {p}");
        }
    }

    #[test]
    fn dual_numbers_over_f2() {
        let f2 = Field::Prime(2);
        let a = Algebra::from_constants(f2, 2, |i, j, k| i64::from(i + j == k)).unwrap();
        let m = Bimodule::regular(&a);
        let found = maps(search_operators(&a, &m, &SearchKind::Grb, DEFAULT_BUDGET).unwrap());
        let times_x = vec![f2.zero(), f2.one(), f2.zero(), f2.zero()];
        assert!(found.contains(&vec![f2.zero(); 4]));
        assert!(found.contains(&times_x));
        let mut sorted = found.clone();
        sorted.sort_by_key(|v| v.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        assert_eq!(found, sorted);
    }

    #[test]
    fn budget_and_field_are_enforced() {
        let f3 = Field::Prime(3);
        let a = Algebra::null(f3, 3);
        let m = Bimodule::regular(&a);
        assert!(matches!(search_operators(&a, &m, &SearchKind::Grb, 1000), Err(Error::Capacity(_))));
        let q = Algebra::null(Field::Rationals, 1);
        assert!(search_operators(&q, &Bimodule::regular(&q), &SearchKind::Grb, DEFAULT_BUDGET).is_err());
    }
}
