//! The graded space `G(B) = ⊕ Hom(B^{⊗m}, B)` with partial compositions, the
//! bar-circle product, the Gerstenhaber bracket and the derived bracket.
//!
//! The degree of a map is its arity `m`; signs use `m − 1`.

use crate::cochains::ARITY_CAP;
use crate::error::{input, Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::{axpy, MultiLinear};

/// A multilinear map `B^m → B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiMap {
    tensor: MultiLinear,
}

impl MultiMap {
    pub fn new(tensor: MultiLinear) -> Result<Self> {
        let d = tensor.output_dim();
        if tensor.arity() == 0 || tensor.input_dims().iter().any(|&x| x != d) {
            return input(format!("a map in G(B) needs all inputs of dimension {d}, got {:?}", tensor.input_dims()));
        }
        if tensor.arity() > ARITY_CAP {
            return Err(Error::Capacity(format!("arity {} exceeds the cap {ARITY_CAP}", tensor.arity())));
        }
        Ok(MultiMap { tensor })
    }

    pub fn zero(field: Field, dim: usize, arity: usize) -> Self {
        MultiMap { tensor: MultiLinear::zeros(field, &vec![dim; arity], dim) }
    }

    pub fn identity(field: Field, dim: usize) -> Self {
        MultiMap {
            tensor: MultiLinear::from_fn(field, &[dim], dim, |t, k| if t[0] == k { field.one() } else { field.zero() }),
        }
    }

    pub fn from_images(field: Field, dim: usize, arity: usize, f: impl FnMut(&[usize]) -> Vec<Scalar>) -> Self {
        MultiMap { tensor: MultiLinear::from_images(field, &vec![dim; arity], dim, f) }
    }

    pub fn arity(&self) -> usize {
        self.tensor.arity()
    }

    pub fn dim(&self) -> usize {
        self.tensor.output_dim()
    }

    pub fn field(&self) -> Field {
        self.tensor.field()
    }

    pub fn tensor(&self) -> &MultiLinear {
        &self.tensor
    }

    pub fn image(&self, tuple: &[usize]) -> &[Scalar] {
        self.tensor.image(tuple)
    }

    pub fn apply(&self, args: &[&[Scalar]]) -> Vec<Scalar> {
        self.tensor.apply(args)
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }

    pub fn add(&self, other: &MultiMap) -> Result<MultiMap> {
        Ok(MultiMap { tensor: self.tensor.try_add(&other.tensor)? })
    }

    pub fn sub(&self, other: &MultiMap) -> Result<MultiMap> {
        Ok(MultiMap { tensor: self.tensor.try_sub(&other.tensor)? })
    }

    pub fn scale(&self, s: &Scalar) -> MultiMap {
        MultiMap { tensor: self.tensor.scale(s) }
    }

    fn compatible(&self, other: &MultiMap) -> Result<()> {
        if self.dim() != other.dim() || self.field() != other.field() {
            return input("maps live on different spaces");
        }
        Ok(())
    }
}

fn sign(field: Field, exponent: usize) -> Scalar {
    if exponent.is_multiple_of(2) {
        field.one()
    } else {
        -field.one()
    }
}

fn result_arity(m: usize, n: usize) -> Result<usize> {
    let r = m + n - 1;
    if r > ARITY_CAP {
        return Err(Error::Capacity(format!(
            "composing arities {m} and {n} gives arity {r}, above the cap {ARITY_CAP}"
        )));
    }
    Ok(r)
}

/// `(f ∘ᵢ g)(b₁,…,b_{m+n−1}) = f(b₁,…,b_{i−1}, g(bᵢ,…,b_{i+n−1}), b_{i+n},…)`, with `i` 1-based.
pub fn circ_i(f: &MultiMap, g: &MultiMap, i: usize) -> Result<MultiMap> {
    f.compatible(g)?;
    let (m, n) = (f.arity(), g.arity());
    if i == 0 || i > m {
        return input(format!("composition slot {i} outside 1..={m}"));
    }
    let arity = result_arity(m, n)?;
    let d = f.dim();
    let field = f.field();
    Ok(MultiMap::from_images(field, d, arity, |t| {
        let mut out = vec![field.zero(); d];
        let inner = g.image(&t[i - 1..i - 1 + n]);
        let mut args: Vec<usize> = Vec::with_capacity(m);
        for (k, c) in inner.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            args.clear();
            args.extend_from_slice(&t[..i - 1]);
            args.push(k);
            args.extend_from_slice(&t[i - 1 + n..]);
            axpy(&mut out, c, f.image(&args));
        }
        out
    }))
}

/// `f ∘̄ g = Σᵢ (−1)^{(i−1)(n−1)} f ∘ᵢ g`.
pub fn bar_circ(f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
    let (m, n) = (f.arity(), g.arity());
    let mut acc = MultiMap::zero(f.field(), f.dim(), result_arity(m, n)?);
    for i in 1..=m {
        let term = circ_i(f, g, i)?;
        let s = sign(f.field(), (i - 1) * (n - 1));
        acc = acc.add(&term.scale(&s))?;
    }
    Ok(acc)
}

/// The Gerstenhaber bracket `[f, g] = f ∘̄ g − (−1)^{(m−1)(n−1)} g ∘̄ f`.
pub fn g_bracket(f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
    let (m, n) = (f.arity(), g.arity());
    let fg = bar_circ(f, g)?;
    let gf = bar_circ(g, f)?;
    fg.sub(&gf.scale(&sign(f.field(), (m - 1) * (n - 1))))
}

/// Whether an arity-2 map is associative, tested as `S ∘̄ S = 0`.
///
/// `[S, S] = 2 (S ∘̄ S)`, so this agrees with `[S, S] = 0` whenever 2 is
/// invertible and stays meaningful in characteristic 2.
pub fn is_square_zero(s: &MultiMap) -> Result<bool> {
    if s.arity() != 2 {
        return input("square-zero test needs an arity-2 map");
    }
    Ok(bar_circ(s, s)?.is_zero())
}

/// The derived bracket `[f, g]_S = [[S, f], g]`; requires `[S, S] = 0`.
pub fn derived_bracket(f: &MultiMap, g: &MultiMap, s: &MultiMap) -> Result<MultiMap> {
    if s.arity() != 2 {
        return input("the derived bracket needs an arity-2 structure map");
    }
    if !is_square_zero(s)? {
        return Err(Error::Precondition("[S, S] ≠ 0: S is not an associative product".into()));
    }
    g_bracket(&g_bracket(s, f)?, g)
}

/// `(−1)^{(m−1)(l−1)}[[f,g],h] + (−1)^{(l−1)(n−1)}[[h,f],g] + (−1)^{(n−1)(m−1)}[[g,h],f]`.
pub fn jacobi_residual(f: &MultiMap, g: &MultiMap, h: &MultiMap) -> Result<MultiMap> {
    let (m, n, l) = (f.arity() - 1, g.arity() - 1, h.arity() - 1);
    let field = f.field();
    let t1 = g_bracket(&g_bracket(f, g)?, h)?.scale(&sign(field, m * l));
    let t2 = g_bracket(&g_bracket(h, f)?, g)?.scale(&sign(field, l * n));
    let t3 = g_bracket(&g_bracket(g, h)?, f)?.scale(&sign(field, n * m));
    t1.add(&t2)?.add(&t3)
}

/// `[f,[g,h]] − [[f,g],h] − (−1)^{(m−1)(n−1)}[g,[f,h]]`.
pub fn leibniz_residual(f: &MultiMap, g: &MultiMap, h: &MultiMap) -> Result<MultiMap> {
    let s = sign(f.field(), (f.arity() - 1) * (g.arity() - 1));
    let lhs = g_bracket(f, &g_bracket(g, h)?)?;
    let r1 = g_bracket(&g_bracket(f, g)?, h)?;
    let r2 = g_bracket(g, &g_bracket(f, h)?)?.scale(&s);
    lhs.sub(&r1)?.sub(&r2)
}

/// `[f,g] + (−1)^{(m−1)(n−1)}[g,f]`.
pub fn antisymmetry_residual(f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
    let s = sign(f.field(), (f.arity() - 1) * (g.arity() - 1));
    g_bracket(f, g)?.add(&g_bracket(g, f)?.scale(&s))
}

/// `f ∘ (g₁ ⊗ … ⊗ g_m)` for arity-1 maps `gᵢ`, e.g. `μ̂(π̂ ⊗ id)`.
pub fn precompose(f: &MultiMap, linear: &[&MultiMap]) -> Result<MultiMap> {
    if linear.len() != f.arity() || linear.iter().any(|g| g.arity() != 1) {
        return input("precompose needs one arity-1 map per input");
    }
    for g in linear {
        f.compatible(g)?;
    }
    let d = f.dim();
    Ok(MultiMap::from_images(f.field(), d, f.arity(), |t| {
        let args: Vec<&[Scalar]> = t.iter().zip(linear).map(|(&i, g)| g.image(&[i])).collect();
        f.apply(&args)
    }))
}

/// `g ∘ f` for arity-1 `g`.
pub fn postcompose(g: &MultiMap, f: &MultiMap) -> Result<MultiMap> {
    if g.arity() != 1 {
        return input("postcompose needs an arity-1 outer map");
    }
    circ_i(g, f, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn mult_by_x() -> MultiMap {
        // β(e0) = e1, β(e1) = 0 on k[x]/(x²)
        let f = q();
        MultiMap::from_images(f, 2, 1, |t| if t[0] == 0 { vec![f.zero(), f.one()] } else { vec![f.zero(), f.zero()] })
    }

    fn dual_numbers_product() -> MultiMap {
        let f = q();
        MultiMap::from_images(f, 2, 2, |t| {
            let k = t[0] + t[1];
            (0..2).map(|j| if j == k { f.one() } else { f.zero() }).collect()
        })
    }

    #[test]
    fn degree_one_bracket_is_commutator() {
        let f = q();
        let a = mult_by_x();
        let b = MultiMap::from_images(f, 2, 1, |t| vec![f.from_int(t[0] as i64 + 1), f.from_int(3)]);
        let br = g_bracket(&a, &b).unwrap();
        let ab = circ_i(&a, &b, 1).unwrap();
        let ba = circ_i(&b, &a, 1).unwrap();
        assert_eq!(br, ab.sub(&ba).unwrap());
    }

    #[test]
    fn bar_circ_sign_pattern_for_binary_maps() {
        let mu = dual_numbers_product();
        let expected = circ_i(&mu, &mu, 1).unwrap().sub(&circ_i(&mu, &mu, 2).unwrap()).unwrap();
        assert_eq!(bar_circ(&mu, &mu).unwrap(), expected);
    }

    #[test]
    fn associative_product_squares_to_zero() {
        assert!(g_bracket(&dual_numbers_product(), &dual_numbers_product()).unwrap().is_zero());
    }

    #[test]
    fn bracket_of_product_with_derivation_like_map() {
        // [μ, β](a, b) = β(a)b + aβ(b) − β(ab); at (1, 1): x + x − x = x.
        let f = q();
        let br = g_bracket(&dual_numbers_product(), &mult_by_x()).unwrap();
        assert_eq!(br.image(&[0, 0]), &[f.zero(), f.one()]);
    }

    #[test]
    fn cap_and_slot_errors() {
        let mu = dual_numbers_product();
        let three = circ_i(&mu, &mu, 1).unwrap();
        assert!(matches!(circ_i(&three, &three, 1), Err(Error::Capacity(_))));
        assert!(matches!(circ_i(&mu, &mu, 3), Err(Error::Input(_))));
        assert!(matches!(circ_i(&mu, &mu, 0), Err(Error::Input(_))));
    }

    #[test]
    fn derived_bracket_requires_square_zero() {
        let f = q();
        // S(e0, e0) = e1, S(e0, e1) = e0 is not associative.
        let s = MultiMap::from_images(f, 2, 2, |t| match (t[0], t[1]) {
            (0, 0) => vec![f.zero(), f.one()],
            (0, 1) => vec![f.one(), f.zero()],
            _ => vec![f.zero(), f.zero()],
        });
        let b = mult_by_x();
        assert!(matches!(derived_bracket(&b, &b, &s), Err(Error::Precondition(_))));
    }
}
