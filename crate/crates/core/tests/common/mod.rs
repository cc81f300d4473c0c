//! Independent oracles on raw exponent vectors, shared by property and
//! acceptance tests. Nothing here calls the library's arithmetic.

#![allow(dead_code)]

use nimax::{IdealBudget, Monomial, MonomialIdeal};

pub type Exps = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn mul(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn in_ideal(raw: &[Exps], x: &[u32]) -> bool {
    raw.iter().any(|g| divides(g, x))
}

pub fn mono(e: &[u32]) -> Monomial {
    Monomial::from_exponents(e.to_vec())
}

/// One random algebra instance: two raw generator lists and two probes.
#[derive(Debug, Clone)]
pub struct Instance {
    pub n: usize,
    pub a: Vec<Exps>,
    pub b: Vec<Exps>,
    pub f: Exps,
    pub g: Exps,
    pub probes: Vec<Exps>,
}

/// Checks every invariant on one instance; `Err` names the first failure.
pub fn check_instance(inst: &Instance) -> Result<(), String> {
    let n = inst.n;
    let fail = |what: &str| Err(format!("{what} failed on {inst:?}"));
    let budget = IdealBudget::default();
    let ia = MonomialIdeal::minimalize(n, inst.a.iter().map(|e| mono(e))).map_err(|e| e.to_string())?;
    let ib = MonomialIdeal::minimalize(n, inst.b.iter().map(|e| mono(e))).map_err(|e| e.to_string())?;
    let gens: Vec<Exps> = ia.generators().iter().map(|m| m.exponents().to_vec()).collect();

    // minimality: antichain, drawn from the input, generating the same ideal
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate() {
            if i != j && divides(x, y) {
                return fail("antichain");
            }
        }
        if !inst.a.contains(x) {
            return fail("generator from input");
        }
    }
    if !inst.a.iter().all(|r| in_ideal(&gens, r)) {
        return fail("same ideal");
    }
    let again = MonomialIdeal::minimalize(n, ia.generators().iter().rev().cloned()).unwrap();
    if again != ia {
        return fail("canonical generator order");
    }

    // membership
    for p in &inst.probes {
        if ia.contains(&mono(p)).unwrap() != in_ideal(&inst.a, p) {
            return fail("membership");
        }
    }

    // colon: h in I:f iff h*f in I
    let cf = ia.colon(&mono(&inst.f)).unwrap();
    for p in inst.probes.iter().chain(std::iter::once(&vec![0; n])) {
        if cf.contains(&mono(p)).unwrap() != in_ideal(&inst.a, &mul(p, &inst.f)) {
            return fail("colon membership");
        }
    }
    for c in cf.generators() {
        if !in_ideal(&inst.a, &mul(c.exponents(), &inst.f)) {
            return fail("colon generator");
        }
    }
    if ia.colon(&Monomial::one(n)).unwrap() != ia {
        return fail("colon by 1");
    }
    // (I:f):g = I:(fg)
    let left = cf.colon(&mono(&inst.g)).unwrap();
    let right = ia.colon(&mono(&mul(&inst.f, &inst.g))).unwrap();
    if left != right {
        return fail("colon composition");
    }

    // products and powers
    let prod = ia.product(&ib, budget).unwrap();
    let pairs: Vec<Exps> = inst
        .a
        .iter()
        .flat_map(|x| inst.b.iter().map(move |y| mul(x, y)))
        .collect();
    for p in inst.probes.iter().chain(pairs.iter()) {
        if prod.contains(&mono(p)).unwrap() != in_ideal(&pairs, p) {
            return fail("product membership");
        }
    }
    if prod != ib.product(&ia, budget).unwrap() {
        return fail("product commutes");
    }
    if ia.power(1, budget).unwrap() != ia {
        return fail("power 1");
    }
    let sq = ia.power(2, budget).unwrap();
    let sq_pairs: Vec<Exps> = inst
        .a
        .iter()
        .flat_map(|x| inst.a.iter().map(move |y| mul(x, y)))
        .collect();
    for p in inst.probes.iter().chain(sq_pairs.iter()) {
        if sq.contains(&mono(p)).unwrap() != in_ideal(&sq_pairs, p) {
            return fail("square membership");
        }
    }

    // i-degree is the largest exponent among minimal generators
    for i in 1..=n {
        let want = gens.iter().map(|e| e[i - 1]).max().unwrap_or(0);
        if ia.i_degree(i).unwrap() != want {
            return fail("i-degree");
        }
    }
    Ok(())
}
