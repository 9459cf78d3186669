use geochroma::exactgeom::{generate_general_position, Configuration, Point, DEFAULT_GEN_BOUND};
use geochroma::planecut::*;
use proptest::prelude::*;

/// Side of `p` recomputed from the raw coefficients.
fn side(c: &CutLine, p: Point) -> i128 {
    (c.a * p.x as i128 + c.b * p.y as i128 - c.c).signum()
}

/// Independent recount: regions and spill partition the domain, no point is
/// on a cut, and every member matches its region's declared side pattern.
fn recount(cfg: &Configuration, ra: &RegionAssignment, domain: &[usize]) {
    let pts = cfg.points().unwrap();
    let mut all: Vec<usize> = ra.regions.iter().flatten().chain(ra.spill.iter()).copied().collect();
    all.sort_unstable();
    let mut want = domain.to_vec();
    want.sort_unstable();
    assert_eq!(all, want, "regions and spill must partition the domain");
    for &v in domain {
        for c in &ra.cuts {
            assert_ne!(side(c, pts[v]), 0);
        }
    }
    for (members, pat) in ra.regions.iter().zip(&ra.patterns) {
        for &v in members {
            for (c, &s) in ra.cuts.iter().zip(pat) {
                if s != 0 {
                    assert_eq!(side(c, pts[v]), s as i128);
                }
            }
        }
    }
}

fn angle_cmp(a: (i128, i128), b: (i128, i128)) -> std::cmp::Ordering {
    let upper = |v: (i128, i128)| v.1 > 0 || (v.1 == 0 && v.0 > 0);
    match (upper(a), upper(b)) {
        (true, false) => std::cmp::Ordering::Less,
        (false, true) => std::cmp::Ordering::Greater,
        _ => 0.cmp(&(a.0 * b.1 - a.1 * b.0)),
    }
}

#[test]
fn six_parts_bound_over_seeds() {
    for n in [30usize, 60, 120] {
        for seed in 0..100u64 {
            let cfg = generate_general_position(n, 1 << 16, seed).unwrap();
            let ra = six_parts_two_parallel(&cfg).unwrap();
            recount(&cfg, &ra, &(0..n).collect::<Vec<_>>());
            let t = n.div_ceil(6) - 1;
            assert!(ra.regions.iter().all(|r| r.len() >= t), "n={n} seed={seed} {:?}", ra.sizes());
            assert!(ra.spill.len() <= 6);
            let par = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| ra.cuts[i].is_parallel(&ra.cuts[j]))
                .count();
            assert!(par >= 1);
        }
    }
}

#[test]
fn six_parts_recount_n100() {
    let cfg = generate_general_position(100, DEFAULT_GEN_BOUND, 3).unwrap();
    let ra = six_parts_two_parallel(&cfg).unwrap();
    recount(&cfg, &ra, &(0..100).collect::<Vec<_>>());
    assert!(ra.regions.iter().all(|r| r.len() >= 16));
}

#[test]
fn fan_sectors_are_clockwise_and_exact() {
    for (m, q, seed) in [(24usize, 3usize, 0u64), (6, 1, 4), (48, 7, 5), (40, 5, 6)] {
        let cfg = generate_general_position(m, DEFAULT_GEN_BOUND, seed).unwrap();
        let ra = six_fan(&cfg, q).unwrap();
        recount(&cfg, &ra, &(0..m).collect::<Vec<_>>());
        assert_eq!(ra.sizes(), vec![q; 6]);
        assert_eq!(ra.spill.len(), m - 6 * q);
        let c = ra.center.unwrap();
        let pts = cfg.points().unwrap();
        assert!(pts.iter().all(|&p| !c.is_point(p)));
        assert!(ra.cuts.iter().all(|l| l.contains_rat(c)));
        // one representative per sector, sorted counterclockwise
        let rel = |v: usize| (c.w * pts[v].x as i128 - c.x, c.w * pts[v].y as i128 - c.y);
        let reps: Vec<(i128, i128)> = ra.regions.iter().map(|r| rel(r[0])).collect();
        let mut ccw: Vec<usize> = (0..6).collect();
        ccw.sort_by(|&a, &b| angle_cmp(reps[a], reps[b]));
        let start = ccw.iter().position(|&r| r == 0).unwrap();
        let from0: Vec<usize> = (0..6).map(|i| ccw[(start + 6 - i) % 6]).collect();
        assert_eq!(from0, vec![0, 1, 2, 3, 4, 5], "regions must be listed clockwise");
        // every region lies in a wedge between consecutive rays: all members
        // are strictly on the same side of each cut as the representative
        for r in &ra.regions {
            for &v in r {
                for l in &ra.cuts {
                    assert_eq!(side(l, pts[v]), side(l, pts[r[0]]));
                }
            }
        }
    }
}

#[test]
fn nine_regions_recount_and_strip_separation() {
    let cfg = generate_general_position(90, DEFAULT_GEN_BOUND, 12).unwrap();
    let nr = nine_regions(&cfg, 9).unwrap();
    let dom: Vec<usize> = (0..90).collect();
    recount(&cfg, &nr.assignment, &dom);
    assert_eq!(nr.assignment.sizes(), vec![9; 9]);
    assert_eq!(nr.assignment.spill.len(), 9);
    let pts = cfg.points().unwrap();
    for a in 0..3 {
        for b in a + 1..3 {
            for (i, &u1) in nr.strips[a].iter().enumerate() {
                for &u2 in &nr.strips[a][i + 1..] {
                    for (j, &w1) in nr.strips[b].iter().enumerate() {
                        for &w2 in &nr.strips[b][j + 1..] {
                            assert!(!geochroma::exactgeom::proper_cross(pts[u1], pts[u2], pts[w1], pts[w2]));
                        }
                    }
                }
            }
        }
    }
    let small = generate_general_position(9, 1000, 2).unwrap();
    let one = nine_regions(&small, 1).unwrap();
    recount(&small, &one.assignment, &(0..9).collect::<Vec<_>>());
    assert_eq!(one.assignment.sizes(), vec![1; 9]);
}

fn sieve_prime_powers(x: usize) -> Vec<bool> {
    let mut composite = vec![false; x + 1];
    let mut pp = vec![false; x + 1];
    for p in 2..=x {
        if composite[p] {
            continue;
        }
        let mut m = p * p;
        while m <= x {
            composite[m] = true;
            m += p;
        }
        let mut q = p;
        while q <= x {
            pp[q] = true;
            q *= p;
        }
    }
    pp
}

#[test]
fn prime_power_matches_sieve() {
    let pp = sieve_prime_powers(5000);
    for x in 2..=5000 {
        let r = prime_power_below(x).unwrap();
        assert!(r <= x && pp[r]);
        assert!((r + 1..=x).all(|y| !pp[y]));
    }
    assert_eq!(prime_power_below(100).unwrap(), 97);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn fan_counts_exact(seed in 0u64..10_000, q in 1usize..5, extra in 0usize..8) {
        let m = 6 * q + extra;
        let cfg = generate_general_position(m, 1 << 18, seed).unwrap();
        let ra = six_fan(&cfg, q).unwrap();
        recount(&cfg, &ra, &(0..m).collect::<Vec<_>>());
        prop_assert_eq!(ra.sizes(), vec![q; 6]);
    }

    #[test]
    fn assignment_json_round_trip(seed in 0u64..1000) {
        let cfg = generate_general_position(24, 1 << 20, seed).unwrap();
        let ra = six_fan(&cfg, 3).unwrap();
        let text = serde_json::to_string(&ra).unwrap();
        let back: RegionAssignment = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, ra);
    }
}
