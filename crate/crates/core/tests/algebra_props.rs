mod common;

use common::{check_instance, divides, Instance};
use nimax::{Graph, IdealBudget, MonomialIdeal, VertexSet};
use nimax::closed_neighborhood_ideal;
use proptest::prelude::*;

fn exps(n: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, n)
}

fn instance() -> impl Strategy<Value = Instance> {
    (1usize..=5).prop_flat_map(|n| {
        (
            prop::collection::vec(exps(n, 3), 1..6),
            prop::collection::vec(exps(n, 3), 1..5),
            exps(n, 3),
            exps(n, 2),
            prop::collection::vec(exps(n, 5), 0..8),
        )
            .prop_map(move |(a, b, f, g, probes)| Instance { n, a, b, f, g, probes })
    })
}

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=8).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn algebra_invariants(inst in instance()) {
        prop_assert_eq!(check_instance(&inst), Ok(()));
    }

    #[test]
    fn text_roundtrip(inst in instance()) {
        let i = MonomialIdeal::minimalize(inst.n, inst.a.iter().map(|e| common::mono(e))).unwrap();
        prop_assert_eq!(MonomialIdeal::parse_text(&i.to_text(), Some(inst.n)).unwrap(), i);
    }

    #[test]
    fn nbhd_ideal_shape(g in graph()) {
        let ni = closed_neighborhood_ideal(&g);
        prop_assert!(ni.generators().len() <= g.n());
        prop_assert!(ni.generators().iter().all(|m| m.is_squarefree()));
        // every N[v] lies in the ideal, and every generator is some N[v]
        for v in 1..=g.n() {
            let nb = nimax::Monomial::from_set(&g.closed_nbhd(v));
            prop_assert!(ni.contains(&nb).unwrap());
        }
        let nbhds: Vec<VertexSet> = (1..=g.n()).map(|v| g.closed_nbhd(v)).collect();
        for m in ni.generators() {
            prop_assert!(nbhds.contains(&m.support_set().unwrap()));
        }
    }

    #[test]
    fn squarefree_power_degrees(g in graph(), t in 1u32..=3) {
        let ni = closed_neighborhood_ideal(&g);
        let p = ni.power(t, IdealBudget::default()).unwrap();
        for i in 1..=g.n() {
            prop_assert!(p.i_degree(i).unwrap() <= t);
        }
        // generators of J^t are products of t generators of J
        let min_deg = ni.generators().iter().map(|m| m.total_degree()).min().unwrap();
        for m in p.generators() {
            prop_assert!(m.total_degree() >= t as u64 * min_deg);
            prop_assert!(ni.generators().iter().any(|a| divides(a.exponents(), m.exponents())));
        }
    }
}
