use proptest::prelude::*;

use orbitlab::partition::{
    collapse, column_union, dominates, is_special, is_x_partition, partitions_of, satisfies_type, special_closure, AlgebraKind,
    ClassicalAlgebra, ClosureMode,
};
use orbitlab::rational::q;
use orbitlab::tableau::{decompose_classes, mirror_extend, rs_tableau, ClassMode};
use orbitlab::verify::{antichain_bound, brute_force_collapse, lambda0_grid};
use orbitlab::{build_lambda, classify, closed_form, constants, z_of, zk_points, GroupSpec, Partition, Rational, WeightSeq};

fn partition_strategy(max_total: usize) -> impl Strategy<Value = Partition> {
    (0..=max_total).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-12i64..=12, prop::sample::select(vec![1i64, 2, 3, 4, 6])).prop_map(|(a, b)| Rational::new(a, b))
}

fn seq_strategy(max_len: usize) -> impl Strategy<Value = WeightSeq> {
    prop::collection::vec(rational_strategy(), 0..=max_len).prop_map(WeightSeq::new)
}

fn naive_dual(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width).map(|j| parts.iter().filter(|&&p| p >= j).count()).collect()
}

/// Longest subsequence where consecutive entries satisfy `rel`, quadratic.
fn longest_chain(x: &[Rational], rel: impl Fn(Rational, Rational) -> bool) -> usize {
    let mut best = vec![1usize; x.len()];
    for i in 0..x.len() {
        for j in 0..i {
            if rel(x[j], x[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

fn algebra_for(total: usize, kind: AlgebraKind) -> Option<ClassicalAlgebra> {
    ClassicalAlgebra::of_size(kind, total).ok()
}

fn small_groups() -> Vec<GroupSpec> {
    vec![
        GroupSpec::su(1, 1).unwrap(),
        GroupSpec::su(2, 2).unwrap(),
        GroupSpec::su(3, 2).unwrap(),
        GroupSpec::sp(2).unwrap(),
        GroupSpec::sp(3).unwrap(),
        GroupSpec::so_star(4).unwrap(),
        GroupSpec::so_star(5).unwrap(),
        GroupSpec::so_odd(3).unwrap(),
        GroupSpec::so_odd(4).unwrap(),
        GroupSpec::so_even(4).unwrap(),
        GroupSpec::so_even(5).unwrap(),
        GroupSpec::E6,
        GroupSpec::E7,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dual_is_an_involution(p in partition_strategy(20)) {
        prop_assert_eq!(p.dual().parts().to_vec(), naive_dual(p.parts()));
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().total(), p.total());
    }

    #[test]
    fn dominance_reverses_under_dual(a in partition_strategy(10), b in partition_strategy(10)) {
        if a.total() == b.total() {
            prop_assert_eq!(dominates(&a, &b).unwrap(), dominates(&b.dual(), &a.dual()).unwrap());
        } else {
            prop_assert!(dominates(&a, &b).is_err());
        }
    }

    #[test]
    fn collapse_matches_oracle(p in partition_strategy(12)) {
        for kind in [AlgebraKind::B, AlgebraKind::C, AlgebraKind::D] {
            let Some(alg) = algebra_for(p.total(), kind) else { continue };
            let c = collapse(&p, alg).unwrap();
            prop_assert_eq!(Some(c.clone()), brute_force_collapse(&p, kind));
            prop_assert!(satisfies_type(&c, kind));
            prop_assert!(dominates(&p, &c).unwrap());
            prop_assert_eq!(collapse(&c, alg).unwrap(), c);
        }
    }

    #[test]
    fn special_closure_is_special(p in partition_strategy(16)) {
        let n = p.total();
        if n % 2 == 1 {
            for mode in [ClosureMode::B, ClosureMode::C, ClosureMode::D, ClosureMode::Cmet] {
                prop_assert!(special_closure(&p, mode).is_err());
            }
            return Ok(());
        }
        let b = special_closure(&p, ClosureMode::B).unwrap();
        prop_assert_eq!(b.total(), n + 1);
        prop_assert!(is_special(&b, ClassicalAlgebra::b(n / 2)).unwrap());
        let c = special_closure(&p, ClosureMode::C).unwrap();
        prop_assert_eq!(c.total(), n);
        prop_assert!(is_special(&c, ClassicalAlgebra::c(n / 2)).unwrap());
        let d = special_closure(&p, ClosureMode::D).unwrap();
        prop_assert!(satisfies_type(&d, AlgebraKind::D));
        let m = special_closure(&p, ClosureMode::Cmet).unwrap();
        prop_assert_eq!(m.total(), n);
        prop_assert!(satisfies_type(&m.dual(), AlgebraKind::D));
    }

    #[test]
    fn column_union_laws(a in partition_strategy(10), b in partition_strategy(10), c in partition_strategy(10)) {
        let ab = column_union([&a, &b]);
        prop_assert_eq!(&ab, &column_union([&b, &a]));
        prop_assert_eq!(column_union([&ab, &c]), column_union([&a, &column_union([&b, &c])]));
        prop_assert_eq!(ab.total(), a.total() + b.total());
        let mut cols = a.dual().parts().to_vec();
        cols.extend(b.dual().parts());
        prop_assert_eq!(ab.dual(), Partition::new(cols));
    }

    #[test]
    fn rs_shape_follows_greene(x in seq_strategy(12)) {
        let shape = rs_tableau(&x).shape();
        prop_assert_eq!(shape.total(), x.len());
        prop_assert_eq!(shape.part(0), longest_chain(x.entries(), |a, b| a <= b));
        prop_assert_eq!(shape.len(), longest_chain(x.entries(), |a, b| a > b));
    }

    #[test]
    fn mirror_is_antisymmetric(x in seq_strategy(10)) {
        let m = mirror_extend(&x);
        let n = m.len();
        prop_assert_eq!(n, 2 * x.len());
        for i in 0..n {
            prop_assert_eq!(m[i], -m[n - 1 - i]);
        }
        prop_assert_eq!(&m.entries()[..x.len()], x.entries());
    }

    #[test]
    fn decomposition_preserves_entries(x in seq_strategy(12)) {
        for mode in [ClassMode::A, ClassMode::BCD] {
            let c = decompose_classes(&x, mode);
            let mut got: Vec<Rational> = c.generic.iter().flat_map(|s| s.iter().copied()).collect();
            got.extend(c.integral.iter().flat_map(|s| s.iter().copied()));
            got.extend(c.half_integral.iter().flat_map(|s| s.iter().copied()));
            let mut want = x.entries().to_vec();
            got.sort();
            want.sort();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn antichain_bound_matches_q2(
        t_gaps in prop::collection::vec(1i64..=3, 0..8),
        s_gaps in prop::collection::vec(1i64..=3, 0..8),
        t_top in -5i64..=5,
        offset in 0i64..=12,
        shift in prop::sample::select(vec![q(0, 1), q(1, 2), q(1, 3)]),
    ) {
        let mut t = vec![Rational::int(t_top)];
        for g in t_gaps {
            let last = *t.last().unwrap();
            t.push(last - g);
        }
        let mut s = vec![*t.last().unwrap() + offset + shift];
        for g in s_gaps {
            let last = *s.last().unwrap();
            s.push(last - g);
        }
        let mu: WeightSeq = t.iter().chain(&s).copied().collect();
        prop_assert_eq!(rs_tableau(&mu).q2(), antichain_bound(&t, &s));
    }

    #[test]
    fn z_round_trips(gi in 0usize..13, pick in any::<prop::sample::Index>(), z in rational_strategy()) {
        let g = small_groups()[gi];
        let grid = lambda0_grid(g, 5);
        let l0 = pick.get(&grid);
        let d = build_lambda(g, l0, z).unwrap();
        if let Some(l) = &d.lambda {
            prop_assert_eq!(z_of(g, l).unwrap(), z);
        }
    }

    #[test]
    fn classifier_outputs_are_consistent(gi in 0usize..13, pick in any::<prop::sample::Index>(), z in rational_strategy()) {
        let g = small_groups()[gi];
        let grid = lambda0_grid(g, 5);
        let l0 = pick.get(&grid);
        let d = build_lambda(g, l0, z).unwrap();
        let rep = classify(g, &d).unwrap();
        let boundary = closed_form(g, &d).unwrap().boundary.is_some();
        prop_assert!(rep.k <= g.real_rank() || boundary);
        let k = rep.k.min(g.real_rank());
        prop_assert_eq!(Rational::from(rep.orbit.dimension() as usize), constants(g).dim_o_k(k) * 2);
        if let (GroupSpec::Su { p, q: qq }, Some(part)) = (g, rep.orbit.partition()) {
            let want = Partition::from_exponents(&[(2, k), (1, p + qq - 2 * k)]);
            prop_assert_eq!(part, &want);
        }
        if let (orbitlab::catalog::Ambient::Classical(alg), Some(part)) = (g.ambient(), rep.orbit.partition()) {
            prop_assert!(is_x_partition(part, alg).unwrap());
            let metaplectic = alg.kind == AlgebraKind::C && satisfies_type(&part.dual(), AlgebraKind::D);
            let integral = d.lambda.as_ref().is_some_and(|l| l.iter().all(|e| e.is_integer()));
            if integral {
                prop_assert!(is_special(part, alg).unwrap() || metaplectic, "{} {} z={}: {}", g, l0, z, part);
            }
        }
    }
}

#[test]
fn top_orbit_fills_p_plus() {
    let cases: Vec<(GroupSpec, i64)> = vec![
        (GroupSpec::su(2, 3).unwrap(), 6),
        (GroupSpec::su(1, 4).unwrap(), 4),
        (GroupSpec::sp(4).unwrap(), 10),
        (GroupSpec::so_star(5).unwrap(), 10),
        (GroupSpec::so_star(6).unwrap(), 15),
        (GroupSpec::so_odd(4).unwrap(), 7),
        (GroupSpec::so_even(5).unwrap(), 8),
        (GroupSpec::E6, 16),
        (GroupSpec::E7, 27),
    ];
    for (g, dim) in cases {
        let c = constants(g);
        assert_eq!(c.dim_o_k(c.r), Rational::int(dim), "{g}");
    }
}

#[test]
fn reduction_points_step_by_c() {
    for g in small_groups() {
        let c = constants(g);
        let zs = zk_points(g);
        assert_eq!(zs.len(), c.r + 1, "{g}");
        assert_eq!(zs[0], Rational::int(c.h_check_minus_1));
        assert!(zs.windows(2).all(|w| w[0] - w[1] == c.c), "{g}");
    }
}
