use geochroma::exactgeom::*;
use proptest::prelude::*;

fn pt() -> impl Strategy<Value = Point> {
    (-1000i64..1000, -1000i64..1000).prop_map(|(x, y)| Point::new(x, y))
}

fn brute_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    // open segments intersect iff each pair straddles the other's line
    let o = |p: Point, q: Point, r: Point| {
        let v = (q.x - p.x) as i128 * (r.y - p.y) as i128 - (q.y - p.y) as i128 * (r.x - p.x) as i128;
        v.signum()
    };
    o(a, b, c) * o(a, b, d) < 0 && o(c, d, a) * o(c, d, b) < 0
}

proptest! {
    #[test]
    fn orient_is_antisymmetric(p in pt(), q in pt(), r in pt()) {
        let s = orient(p, q, r);
        prop_assert_eq!(orient(q, p, r), -s);
        prop_assert_eq!(orient(p, r, q), -s);
        prop_assert_eq!(orient(r, q, p), -s);
        prop_assert_eq!(orient(q, r, p), s);
    }

    #[test]
    fn proper_cross_symmetric_and_shear_invariant(a in pt(), b in pt(), c in pt(), d in pt(), s in -5i64..5) {
        let all = [a, b, c, d];
        prop_assume!(all.iter().enumerate().all(|(i, p)| all[i + 1..].iter().all(|q| p != q)));
        prop_assume!(orient(a, b, c) != 0 && orient(a, b, d) != 0 && orient(c, d, a) != 0 && orient(c, d, b) != 0);
        let x = proper_cross(a, b, c, d);
        prop_assert_eq!(x, proper_cross(c, d, a, b));
        prop_assert_eq!(x, proper_cross(b, a, d, c));
        prop_assert_eq!(x, brute_cross(a, b, c, d));
        let shear = |p: Point| Point::new(p.x + s * p.y, p.y);
        prop_assert_eq!(x, proper_cross(shear(a), shear(b), shear(c), shear(d)));
    }

    #[test]
    fn parts_conflict_is_symmetric(seed in 0u64..500, k in 2usize..5) {
        let cfg = generate_general_position(10, 50, seed).unwrap();
        let a: Vec<usize> = (0..k).map(|i| (i * 3 + seed as usize) % 10).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let b: Vec<usize> = (0..k).map(|i| (i * 7 + 1 + seed as usize) % 10).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        prop_assert_eq!(cfg.parts_conflict(&a, &b), cfg.parts_conflict(&b, &a));
        let conv = Configuration::convex(10).unwrap();
        prop_assert_eq!(conv.parts_conflict(&a, &b), conv.parts_conflict(&b, &a));
    }
}

#[test]
fn convex_rule_matches_parabola_for_small_n() {
    for n in 4..=10 {
        let par = parabola_configuration(n).unwrap();
        let pts = par.points().unwrap();
        let edges: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v))).collect();
        for &e in &edges {
            for &f in &edges {
                if e.shares_endpoint(f) {
                    assert!(!convex_cross(n, e, f));
                    continue;
                }
                assert_eq!(
                    convex_cross(n, e, f),
                    proper_cross(pts[e.u], pts[e.v], pts[f.u], pts[f.v]),
                    "n={n} {e:?} {f:?}"
                );
            }
        }
    }
}

#[test]
fn convex_crossings_count_four_subsets() {
    for n in 3..=12 {
        let edges: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v))).collect();
        let mut count = 0;
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if convex_cross(n, e, f) {
                    count += 1;
                }
            }
        }
        let c4 = if n >= 4 { n * (n - 1) * (n - 2) * (n - 3) / 24 } else { 0 };
        assert_eq!(count, c4, "n={n}");
    }
}

#[test]
fn generated_sets_are_in_general_position() {
    let cfg = generate_general_position(50, DEFAULT_GEN_BOUND, 7).unwrap();
    let p = cfg.points().unwrap();
    for a in 0..50 {
        for b in a + 1..50 {
            assert_ne!(p[a], p[b]);
            for c in b + 1..50 {
                assert_ne!(orient(p[a], p[b], p[c]), 0);
            }
        }
    }
    assert_eq!(generate_general_position(1, 10, 0).unwrap().n(), 1);
    assert_eq!(cfg, generate_general_position(50, DEFAULT_GEN_BOUND, 7).unwrap());
    assert!(generate_general_position(40, 1, 0).is_err());
}

#[test]
fn loader_rejects_out_of_bound_and_collinear() {
    let far = format!(r#"{{"mode":"coordinates","n":3,"points":[[0,0],[1,0],[{},5]]}}"#, COORD_BOUND + 1);
    assert!(serde_json::from_str::<Configuration>(&far).is_err());
    let line = r#"{"mode":"coordinates","n":3,"points":[[0,0],[1,1],[2,2]]}"#;
    assert!(serde_json::from_str::<Configuration>(line).is_err());
    let ok = r#"{"mode":"coordinates","n":3,"points":[[0,0],[1,0],[0,1]]}"#;
    assert_eq!(serde_json::from_str::<Configuration>(ok).unwrap().n(), 3);
}
