//! Independent reference implementations used as oracles, and random data.
//!
//! Nothing here calls the evaluation code under test: products are read
//! entry by entry from structure constants and evaluated with plain loops.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rbx_core::{Algebra, Bimodule, Field, LinearMap, MultiLinear, MultiMap, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- vectors

pub fn zeros(f: Field, n: usize) -> Vec<Scalar> {
    vec![f.zero(); n]
}

pub fn unit(f: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(f, n);
    v[i] = f.one();
    v
}

pub fn add(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale(c: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| c * a).collect()
}

/// All index tuples of length `k` over `0..d`, first index most significant.
pub fn all_tuples(d: usize, k: usize) -> Vec<Vec<usize>> {
    let total = d.pow(k as u32);
    (0..total)
        .map(|mut code| {
            let mut t = vec![0; k];
            for slot in (0..k).rev() {
                t[slot] = code % d;
                code /= d;
            }
            t
        })
        .collect()
}

/// Evaluates a multilinear tensor on arbitrary vectors by summing over every basis tuple.
pub fn eval(t: &MultiLinear, args: &[&[Scalar]]) -> Vec<Scalar> {
    let f = t.field();
    let mut out = zeros(f, t.output_dim());
    let dims = t.input_dims().to_vec();
    let mut idx = vec![0usize; dims.len()];
    loop {
        let mut c = f.one();
        for (slot, &i) in idx.iter().enumerate() {
            c = &c * &args[slot][i];
        }
        if !c.is_zero() {
            for (k, o) in out.iter_mut().enumerate() {
                *o = &*o + &(&c * t.entry(&idx, k));
            }
        }
        let mut pos = dims.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < dims[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub fn mul(a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    eval(a.product(), &[x, y])
}

pub fn left(m: &Bimodule, a: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
    eval(m.left(), &[a, x])
}

pub fn right(m: &Bimodule, x: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
    eval(m.right(), &[x, a])
}

pub fn apply(map: &LinearMap, x: &[Scalar]) -> Vec<Scalar> {
    eval(map.matrix(), &[x])
}

// ---------------------------------------------------------- identities

/// `π(m)π(n) − π(π(m)·n + m·π(n) + φ(π(m), π(n)))` on every basis pair.
pub fn twisted_rb_holds(a: &Algebra, m: &Bimodule, pi: &LinearMap, phi: Option<&MultiLinear>) -> bool {
    let f = a.field();
    let dm = m.dim();
    all_tuples(dm, 2).iter().all(|t| {
        let (x, y) = (unit(f, dm, t[0]), unit(f, dm, t[1]));
        let (px, py) = (apply(pi, &x), apply(pi, &y));
        let lhs = mul(a, &px, &py);
        let mut inner = add(&left(m, &px, &y), &right(m, &x, &py));
        if let Some(phi) = phi {
            inner = add(&inner, &eval(phi, &[&px, &py]));
        }
        lhs == apply(pi, &inner)
    })
}

pub fn reynolds_holds(a: &Algebra, r: &LinearMap) -> bool {
    let f = a.field();
    let d = a.dim();
    all_tuples(d, 2).iter().all(|t| {
        let (x, y) = (unit(f, d, t[0]), unit(f, d, t[1]));
        let (rx, ry) = (apply(r, &x), apply(r, &y));
        let lhs = mul(a, &rx, &ry);
        let inner = sub(&add(&mul(a, &rx, &y), &mul(a, &x, &ry)), &lhs);
        lhs == apply(r, &inner)
    })
}

pub fn associative(p: &MultiLinear) -> bool {
    let d = p.output_dim();
    let f = p.field();
    all_tuples(d, 3).iter().all(|t| {
        let (x, y, z) = (unit(f, d, t[0]), unit(f, d, t[1]), unit(f, d, t[2]));
        eval(p, &[&eval(p, &[&x, &y]), &z]) == eval(p, &[&x, &eval(p, &[&y, &z])])
    })
}

/// The Hochschild coboundary of `φ: Aⁿ → M`, evaluated on a basis tuple.
pub fn coboundary_at(a: &Algebra, m: &Bimodule, phi: &MultiLinear, t: &[usize]) -> Vec<Scalar> {
    let f = a.field();
    let (da, n) = (a.dim(), phi.arity());
    let args: Vec<Vec<Scalar>> = t.iter().map(|&i| unit(f, da, i)).collect();
    let call = |xs: &[Vec<Scalar>]| {
        let refs: Vec<&[Scalar]> = xs.iter().map(Vec::as_slice).collect();
        eval(phi, &refs)
    };
    let mut acc = left(m, &args[0], &call(&args[1..]));
    for i in 0..n {
        let mut merged = args[..i].to_vec();
        merged.push(mul(a, &args[i], &args[i + 1]));
        merged.extend_from_slice(&args[i + 2..]);
        let term = call(&merged);
        acc = if i % 2 == 0 { sub(&acc, &term) } else { add(&acc, &term) };
    }
    let last = right(m, &call(&args[..n]), &args[n]);
    if n % 2 == 0 {
        sub(&acc, &last)
    } else {
        add(&acc, &last)
    }
}

// ------------------------------------------------- Gerstenhaber bracket

type Call<'a> = Box<dyn Fn(&[Vec<Scalar>]) -> Vec<Scalar> + 'a>;

/// A multilinear map as a closure, with its arity.
pub struct Op<'a> {
    pub arity: usize,
    pub call: Call<'a>,
}

pub fn op_of(f: &MultiMap) -> Op<'_> {
    Op {
        arity: f.arity(),
        call: Box::new(move |xs: &[Vec<Scalar>]| {
            let refs: Vec<&[Scalar]> = xs.iter().map(Vec::as_slice).collect();
            eval(f.tensor(), &refs)
        }),
    }
}

fn sign(exp: usize, x: Vec<Scalar>) -> Vec<Scalar> {
    if exp.is_multiple_of(2) {
        x
    } else {
        x.into_iter().map(|s| -s).collect()
    }
}

/// `f ∘̄ g` straight from the definition.
pub fn bar_circ_op<'a>(f: &'a Op<'a>, g: &'a Op<'a>) -> Op<'a> {
    let (m, n) = (f.arity, g.arity);
    Op {
        arity: m + n - 1,
        call: Box::new(move |xs: &[Vec<Scalar>]| {
            let mut acc: Option<Vec<Scalar>> = None;
            for i in 0..m {
                let mut args = xs[..i].to_vec();
                args.push((g.call)(&xs[i..i + n]));
                args.extend_from_slice(&xs[i + n..]);
                let term = sign(i * (n - 1), (f.call)(&args));
                acc = Some(match acc {
                    None => term,
                    Some(a) => add(&a, &term),
                });
            }
            acc.expect("arity ≥ 1")
        }),
    }
}

pub fn bracket_op<'a>(f: &'a Op<'a>, g: &'a Op<'a>) -> Op<'a> {
    let (m, n) = (f.arity, g.arity);
    let fg = bar_circ_op(f, g);
    let gf = bar_circ_op(g, f);
    Op {
        arity: m + n - 1,
        call: Box::new(move |xs: &[Vec<Scalar>]| {
            let a = (fg.call)(xs);
            let b = sign((m - 1) * (n - 1), (gf.call)(xs));
            sub(&a, &b)
        }),
    }
}

/// Tabulates an operator on basis tuples as a [`MultiMap`].
pub fn tabulate(op: &Op<'_>, field: Field, dim: usize) -> MultiMap {
    MultiMap::from_images(field, dim, op.arity, |t| {
        let args: Vec<Vec<Scalar>> = t.iter().map(|&i| unit(field, dim, i)).collect();
        (op.call)(&args)
    })
}

// ------------------------------------------------------------- AYBE

/// `r₁₃r₁₂ − r₁₂r₂₃ + r₂₃r₁₃` computed in `(A⁺)^{⊗3}` for the unitization
/// `A⁺ = k1 ⊕ A`, then restricted to `A^{⊗3}`. Index `u·d² + v·d + w`.
pub fn aybe_oracle(a: &Algebra, r: &[Scalar]) -> Vec<Scalar> {
    let f = a.field();
    let d = a.dim();
    let e = d + 1;
    // product on A⁺ with basis 0 = 1, i + 1 = eᵢ
    let plus = |x: usize, y: usize| -> Vec<Scalar> {
        let mut out = zeros(f, e);
        match (x, y) {
            (0, _) => out[y] = f.one(),
            (_, 0) => out[x] = f.one(),
            _ => {
                for k in 0..d {
                    out[k + 1] = a.product().entry(&[x - 1, y - 1], k).clone();
                }
            }
        }
        out
    };
    type T3 = BTreeMap<[usize; 3], Scalar>;
    let embed = |slots: (usize, usize)| -> T3 {
        let mut t = T3::new();
        for p in 0..d {
            for q in 0..d {
                let c = &r[p * d + q];
                if c.is_zero() {
                    continue;
                }
                let mut key = [0usize; 3];
                key[slots.0] = p + 1;
                key[slots.1] = q + 1;
                t.insert(key, c.clone());
            }
        }
        t
    };
    let product = |x: &T3, y: &T3| -> T3 {
        let mut out = T3::new();
        for (kx, cx) in x {
            for (ky, cy) in y {
                let c = cx * cy;
                let parts: Vec<Vec<Scalar>> = (0..3).map(|s| plus(kx[s], ky[s])).collect();
                for u in 0..e {
                    for v in 0..e {
                        for w in 0..e {
                            let coeff = &(&(&c * &parts[0][u]) * &parts[1][v]) * &parts[2][w];
                            if !coeff.is_zero() {
                                let slot = out.entry([u, v, w]).or_insert_with(|| f.zero());
                                *slot = &*slot + &coeff;
                            }
                        }
                    }
                }
            }
        }
        out
    };
    let (r12, r13, r23) = (embed((0, 1)), embed((0, 2)), embed((1, 2)));
    let mut total = T3::new();
    for (t, sgn) in [(product(&r13, &r12), 1), (product(&r12, &r23), -1), (product(&r23, &r13), 1)] {
        for (k, c) in t {
            let c = if sgn < 0 { -c } else { c };
            let slot = total.entry(k).or_insert_with(|| f.zero());
            *slot = &*slot + &c;
        }
    }
    let mut out = zeros(f, d * d * d);
    for (k, c) in total {
        if c.is_zero() {
            continue;
        }
        assert!(k.iter().all(|&i| i > 0), "unit component in a product of A-tensors");
        out[(k[0] - 1) * d * d + (k[1] - 1) * d + (k[2] - 1)] = c;
    }
    out
}

// --------------------------------------------------- Weyl rewriting

/// Polynomials in noncommuting `x`, `y` as words over `{x, y}`.
pub type Words = BTreeMap<Vec<u8>, BigRational>;

pub fn word(i: u32, j: u32) -> Vec<u8> {
    let mut w = vec![b'x'; i as usize];
    w.extend(std::iter::repeat_n(b'y', j as usize));
    w
}

/// Normal-orders by rewriting `yx → xy − 1` until every word is `xⁱyʲ`.
pub fn normal_order(mut p: Words) -> Words {
    loop {
        let pos = p.iter().find_map(|(w, _)| w.windows(2).position(|s| s == b"yx").map(|i| (w.clone(), i)));
        let Some((w, i)) = pos else {
            p.retain(|_, c| !c.is_zero());
            return p;
        };
        let c = p.remove(&w).expect("word present");
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        let mut dropped = w.clone();
        dropped.drain(i..i + 2);
        *p.entry(swapped).or_insert_with(BigRational::zero) += &c;
        *p.entry(dropped).or_insert_with(BigRational::zero) -= &c;
    }
}

pub fn words_mul(a: &Words, b: &Words) -> Words {
    let mut out = Words::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            *out.entry(w).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    normal_order(out)
}

pub fn words_add(a: &Words, b: &Words) -> Words {
    let mut out = a.clone();
    for (w, c) in b {
        *out.entry(w.clone()).or_insert_with(BigRational::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn words_sub(a: &Words, b: &Words) -> Words {
    let neg: Words = b.iter().map(|(w, c)| (w.clone(), -c)).collect();
    words_add(a, &neg)
}

pub fn monomial(i: u32, j: u32) -> Words {
    Words::from([(word(i, j), BigRational::one())])
}

fn degrees(w: &[u8]) -> (u32, u32) {
    let i = w.iter().filter(|&&c| c == b'x').count() as u32;
    (i, w.len() as u32 - i)
}

/// `∫ dy` on normal-ordered words.
pub fn words_integral(a: &Words) -> Words {
    a.iter()
        .map(|(w, c)| {
            let (i, j) = degrees(w);
            (word(i, j + 1), c / BigRational::from_integer((j + 1).into()))
        })
        .collect()
}

/// `[x, a] = xa − ax`.
pub fn words_ad_x(a: &Words) -> Words {
    let x = monomial(1, 0);
    words_sub(&words_mul(&x, a), &words_mul(a, &x))
}

/// Converts to `(i, j) → c` for comparison with the structured engine.
pub fn words_terms(a: &Words) -> BTreeMap<(u32, u32), BigRational> {
    a.iter().map(|(w, c)| (degrees(w), c.clone())).collect()
}

// ------------------------------------------------------------ random

pub fn random_scalar(f: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match f {
        Field::Rationals => {
            let n = rng.gen_range(-3i64..=3);
            let d = [1i64, 1, 1, 2, 3][rng.gen_range(0..5)];
            f.from_ratio(n, d).unwrap()
        }
        Field::Prime(p) => f.from_int(rng.gen_range(0..p as i64)),
    }
}

/// Entries are zero with probability one half, so sparse tensors are common.
pub fn random_tensor(f: Field, inputs: &[usize], output: usize, rng: &mut ChaCha8Rng) -> MultiLinear {
    MultiLinear::from_fn(f, inputs, output, |_, _| if rng.gen_bool(0.5) { f.zero() } else { random_scalar(f, rng) })
}

pub fn random_multimap(f: Field, dim: usize, arity: usize, rng: &mut ChaCha8Rng) -> MultiMap {
    MultiMap::new(random_tensor(f, &vec![dim; arity], dim, rng)).unwrap()
}

pub fn random_map(f: Field, source: usize, target: usize, rng: &mut ChaCha8Rng) -> LinearMap {
    LinearMap::new(random_tensor(f, &[source], target, rng)).unwrap()
}

pub fn random_invertible(f: Field, n: usize, rng: &mut ChaCha8Rng) -> (LinearMap, LinearMap) {
    loop {
        let m = random_map(f, n, n, rng);
        if let Some(inv) = m.inverse() {
            return (m, inv);
        }
    }
}

/// The product of `a` transported along a random change of basis: associative by construction.
pub fn conjugated_product(a: &Algebra, rng: &mut ChaCha8Rng) -> MultiLinear {
    let f = a.field();
    let n = a.dim();
    let (g, g_inv) = random_invertible(f, n, rng);
    // x ⋆ y = g(g⁻¹x · g⁻¹y)
    MultiLinear::from_fn(f, &[n, n], n, |t, k| {
        let x = apply(&g_inv, &unit(f, n, t[0]));
        let y = apply(&g_inv, &unit(f, n, t[1]));
        apply(&g, &mul(a, &x, &y))[k].clone()
    })
}

/// Every map `source → target` over `𝔽_p`, flattened rows first, in lexicographic order.
pub fn all_maps(f: Field, source: usize, target: usize) -> Vec<LinearMap> {
    let elems = f.elements().expect("finite field");
    let p = elems.len();
    all_tuples(p, source * target)
        .into_iter()
        .map(|code| LinearMap::from_fn(f, source, target, |i, k| elems[code[i * target + k]].clone()))
        .collect()
}

/// Lifts a map over `𝔽_p` to `ℚ` by taking residues as integers.
pub fn lift_to_q(map: &LinearMap) -> LinearMap {
    let q = Field::Rationals;
    LinearMap::from_fn(q, map.source_dim(), map.target_dim(), |i, k| {
        q.from_rational(&map.image(i)[k].to_rational()).unwrap()
    })
}
