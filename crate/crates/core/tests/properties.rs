use mimenum::dag::{gg, sg, EnumMode, LayeredDag};
use mimenum::equiv::{key_of, RepTable, Side};
use mimenum::graph::{cut_widths, interval_graph, interval_order, mim, order_mim_width, Rational};
use mimenum::oracle::{brute_family, brute_lmimw, Kind};
use mimenum::sigma_rho::{dominates, Mode};
use mimenum::usq::{ball, frac_order, realize};
use mimenum::{ColoredGraph, LinearOrder, NatSet, SigmaRho};
use proptest::prelude::*;

fn natset() -> impl Strategy<Value = NatSet> {
    (any::<bool>(), prop::collection::vec(0u32..6, 0..4)).prop_map(|(co, b)| {
        if co {
            NatSet::cofinite(b)
        } else {
            NatSet::finite(b)
        }
    })
}

fn spec() -> impl Strategy<Value = SigmaRho> {
    (natset(), natset()).prop_map(|(s, r)| SigmaRho::new(s, r))
}

/// Random colored graph with a random ordering.
fn instance(max_n: usize) -> impl Strategy<Value = (ColoredGraph, LinearOrder)> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                prop::collection::vec(any::<bool>(), pairs),
                prop::collection::vec(0u8..3, n),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, bits, colors, seq)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            let red: Vec<usize> = (0..n).filter(|&v| colors[v] != 1).collect();
            let blue: Vec<usize> = (0..n).filter(|&v| colors[v] != 0).collect();
            let g = ColoredGraph::new(n, edges).unwrap().with_colors(red, blue).unwrap();
            (g, LinearOrder::new(seq).unwrap())
        })
}

fn subsets(ground: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << ground.len())
        .map(|m| {
            (0..ground.len())
                .filter(|&i| m >> i & 1 == 1)
                .map(|i| ground[i])
                .collect()
        })
        .collect()
}

fn uncolored(g: &ColoredGraph) -> ColoredGraph {
    ColoredGraph::new(g.n(), g.edges().collect::<Vec<_>>()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derived_set_d_values_are_bounded(s in spec()) {
        prop_assert_eq!(s.dhat, s.d + 1);
        prop_assert!(s.d_of(Mode::Minus) <= s.d + 1);
        prop_assert!(s.d_of(Mode::Plus) <= s.d + 1);
        prop_assert!(s.d_of(Mode::Star) <= s.d);
    }

    #[test]
    fn derived_sets_match_definitions(s in spec()) {
        for k in 0..12u32 {
            prop_assert_eq!(s.sigma_star.contains(k), s.sigma.contains(k) && !s.rho.contains(k));
            prop_assert_eq!(s.rho_star.contains(k), s.rho.contains(k) && !s.sigma.contains(k));
            prop_assert_eq!(s.sigma_minus.contains(k), s.sigma.contains(k) && (k == 0 || !s.sigma.contains(k - 1)));
            prop_assert_eq!(s.rho_minus.contains(k), s.rho.contains(k) && (k == 0 || !s.rho.contains(k - 1)));
            prop_assert_eq!(s.sigma_plus.contains(k), s.sigma.contains(k) && !s.sigma.contains(k + 1));
            prop_assert_eq!(s.rho_plus.contains(k), s.rho.contains(k) && !s.rho.contains(k + 1));
        }
    }

    #[test]
    fn equivalent_prefixes_are_interchangeable((g, ord) in instance(8), s in spec(), cut in 0usize..9, seed in any::<u64>()) {
        let cut = cut.min(g.n());
        let table = RepTable::build(&g, &ord, cut, Side::Prefix, s.dhat).unwrap();
        let ground: Vec<usize> = table.ground().to_vec();
        let rest: Vec<usize> = ord.suffix(cut).iter().copied().filter(|&v| g.is_red(v)).collect();
        let targets: Vec<usize> = ord.suffix(cut).iter().copied().filter(|&v| g.is_blue(v)).collect();
        let xs = subsets(&ground);
        let ws = subsets(&rest);
        let x = &xs[(seed as usize) % xs.len()];
        let w = &ws[(seed as usize / 7) % ws.len()];
        let r = table.rep(table.find_rep(&g, x).unwrap()).to_vec();
        let mut a = x.clone();
        a.extend(w);
        let mut b = r.clone();
        b.extend(w);
        for mode in [Mode::Base, Mode::Star, Mode::Minus, Mode::Plus] {
            prop_assert_eq!(
                dominates(&g, &s, &a, &targets, mode).unwrap(),
                dominates(&g, &s, &b, &targets, mode).unwrap()
            );
        }
    }

    #[test]
    fn representatives_are_least_and_complete((g, ord) in instance(8), cut in 0usize..9, dhat in 1u32..4, prefix in any::<bool>()) {
        let cut = cut.min(g.n());
        let side = if prefix { Side::Prefix } else { Side::Suffix };
        let table = RepTable::build(&g, &ord, cut, side, dhat).unwrap();
        let order_key = |s: &[usize]| {
            let mut p: Vec<usize> = s.iter().map(|&v| ord.position(v)).collect();
            p.sort_unstable();
            (s.len(), p)
        };
        let mut classes = std::collections::HashMap::new();
        for x in subsets(table.ground()) {
            let key = key_of(&g, &ord, cut, side, &x, dhat).unwrap();
            let rep = table.rep(table.find_rep(&g, &x).unwrap()).to_vec();
            prop_assert_eq!(key_of(&g, &ord, cut, side, &rep, dhat).unwrap(), key.clone());
            let e = classes.entry(key).or_insert_with(|| x.clone());
            if order_key(&x) < order_key(e) {
                *e = x;
            }
        }
        prop_assert_eq!(classes.len(), table.len());
        for best in classes.values() {
            let rep = table.rep(table.find_rep(&g, best).unwrap());
            prop_assert_eq!(order_key(rep), order_key(best));
        }
    }

    #[test]
    fn sg_and_gg_keep_neighborhoods_and_are_idempotent((g, ord) in instance(8), cut in 0usize..9, seed in any::<u32>()) {
        let cut = cut.min(g.n());
        let red_nbrs = |c: &[usize], side: &dyn Fn(usize) -> bool| {
            let mut out: Vec<usize> = c.iter().flat_map(|&v| g.neighbors(v).iter().copied())
                .filter(|&w| g.is_red(w) && side(ord.position(w))).collect();
            out.sort_unstable();
            out.dedup();
            out
        };
        let pre: Vec<usize> = ord.prefix(cut).iter().copied().filter(|&v| g.is_blue(v)).collect();
        let c: Vec<usize> = pre.iter().copied().enumerate().filter(|(i, _)| seed >> (i % 32) & 1 == 1).map(|(_, v)| v).collect();
        let s1 = sg(&g, &ord, cut, &c).unwrap();
        prop_assert!(s1.iter().all(|v| c.contains(v)));
        let future = |p: usize| p >= cut;
        prop_assert_eq!(red_nbrs(&s1, &future), red_nbrs(&c, &future));
        prop_assert_eq!(sg(&g, &ord, cut, &s1).unwrap(), s1.clone());

        let suf: Vec<usize> = ord.suffix(cut).iter().copied().filter(|&v| g.is_blue(v)).collect();
        let c: Vec<usize> = suf.iter().copied().enumerate().filter(|(i, _)| seed >> (i % 32) & 1 == 1).map(|(_, v)| v).collect();
        let s2 = gg(&g, &ord, cut, &c).unwrap();
        let past = |p: usize| p < cut;
        prop_assert_eq!(red_nbrs(&s2, &past), red_nbrs(&c, &past));
        prop_assert_eq!(gg(&g, &ord, cut, &s2).unwrap(), s2);
    }

    #[test]
    fn dag_count_sums_and_node_sizes((g, ord) in instance(9), s in spec(), maximal in any::<bool>()) {
        let mode = if maximal { EnumMode::Maximal } else { EnumMode::Minimal };
        let dag = LayeredDag::build(&g, &s, &ord, mode).unwrap();
        prop_assert!(dag.check_path_sums());
        let sols = dag.solutions();
        prop_assert_eq!(dag.count(), num_bigint::BigUint::from(sols.len()));
        let mut dedup = sols.clone();
        dedup.sort();
        dedup.dedup();
        prop_assert_eq!(dedup.len(), sols.len());
        let kind = if maximal { Kind::OneMaximal } else { Kind::OneMinimal };
        let mut want = brute_family(&g, &s, kind).unwrap();
        want.sort();
        prop_assert_eq!(dedup, want);
        if g.n() >= 2 {
            let c = order_mim_width(&g, &ord).unwrap();
            let (a, b) = dag.max_carrier_sizes();
            prop_assert!(a <= c && b <= c, "carriers {a}/{b} exceed width {c}");
        }
    }

    #[test]
    fn coloring_never_increases_width((g, ord) in instance(10)) {
        prop_assume!(g.n() >= 2);
        prop_assert!(order_mim_width(&g, &ord).unwrap() <= order_mim_width(&uncolored(&g), &ord).unwrap());
    }

    #[test]
    fn lmimw_coloring_monotone((g, _) in instance(6)) {
        prop_assert!(brute_lmimw(&g).unwrap() <= brute_lmimw(&uncolored(&g)).unwrap());
    }

    #[test]
    fn width_zero_iff_no_cross_edge((g, ord) in instance(10)) {
        prop_assume!(g.n() >= 2);
        let cross = (1..g.n()).any(|i| {
            ord.prefix(i).iter().any(|&a| ord.suffix(i).iter().any(|&b| {
                g.adjacent(a, b) && ((g.is_red(a) && g.is_blue(b)) || (g.is_blue(a) && g.is_red(b)))
            }))
        });
        prop_assert_eq!(order_mim_width(&g, &ord).unwrap() == 0, !cross);
        prop_assert_eq!(cut_widths(&g, &ord).unwrap().len(), g.n() - 1);
    }

    #[test]
    fn mim_monotone_under_deletion((g, ord) in instance(10), cut in 1usize..10, drop in any::<u16>()) {
        let cut = cut.min(g.n());
        let a: Vec<usize> = ord.prefix(cut).to_vec();
        let b: Vec<usize> = ord.suffix(cut).to_vec();
        let a2: Vec<usize> = a.iter().copied().filter(|&v| drop >> (v % 16) & 1 == 0).collect();
        let b2: Vec<usize> = b.iter().copied().filter(|&v| drop >> (v % 16) & 1 == 0).collect();
        prop_assert!(mim(&g, &a2, &b2).unwrap() <= mim(&g, &a, &b).unwrap());
    }

    #[test]
    fn minimal_dominating_families_are_antichains((g, _) in instance(10)) {
        let fam = brute_family(&g, &SigmaRho::domination(), Kind::OneMinimal).unwrap();
        for a in &fam {
            for b in &fam {
                prop_assert!(a == b || !a.iter().all(|v| b.contains(v)));
            }
        }
    }

    #[test]
    fn interval_orders_have_width_at_most_one(ivs in prop::collection::vec((0i64..40, 0i64..15), 2..12)) {
        let ivs: Vec<(Rational, Rational)> = ivs.iter()
            .map(|&(l, len)| (Rational::from_integer(l.into()), Rational::from_integer((l + len).into())))
            .collect();
        let g = interval_graph(&ivs).unwrap();
        prop_assert!(order_mim_width(&g, &interval_order(&ivs).unwrap()).unwrap() <= 1);
    }

    #[test]
    fn frac_order_width_bound(pts in prop::collection::vec((0i64..=20, 0i64..=20), 2..10), r in 0usize..3) {
        // points in [1,3] x [1,3]: h = w = 2
        let pts: Vec<(Rational, Rational)> = pts.iter()
            .map(|&(x, y)| (Rational::new((10 + x).into(), 10.into()), Rational::new((10 + y).into(), 10.into())))
            .collect();
        let (g, f) = realize(pts).unwrap();
        let all: Vec<usize> = (0..g.n()).collect();
        let ord = LinearOrder::new(frac_order(&f, &all).unwrap()).unwrap();
        prop_assert!(order_mim_width(&g, &ord).unwrap() <= 8);

        let b = ball(&g, 0, r).unwrap();
        if b.len() >= 2 {
            let (sub, map) = g.induced_subgraph(&b).unwrap();
            let seq: Vec<usize> = frac_order(&f, &b).unwrap().into_iter()
                .map(|v| map.binary_search(&v).unwrap()).collect();
            let bound = 2 * (2 * r + 1) * (2 * r + 1);
            prop_assert!(order_mim_width(&sub, &LinearOrder::new(seq).unwrap()).unwrap() <= bound);
        }
    }
}
