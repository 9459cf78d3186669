//! One PASS/FAIL line per acceptance criterion. Attainable clauses are hard
//! asserts; clauses known to be unreachable with the prescribed parameters
//! are reported as FAIL without aborting the run.

use std::collections::HashMap;

use geochroma::chroma::*;
use geochroma::constructions::*;
use geochroma::designs::*;
use geochroma::exactgeom::{generate_general_position, Configuration, RatPoint, DEFAULT_GEN_BOUND};
use geochroma::experiment::random_packing;
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn report(id: usize, pass: bool, detail: impl std::fmt::Display) {
    println!("acceptance {id}: {} {detail}", if pass { "PASS" } else { "FAIL" });
}

// Independent geometry oracle.

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    let v = (b.0 as i128 - a.0 as i128) * (c.1 as i128 - a.1 as i128)
        - (b.1 as i128 - a.1 as i128) * (c.0 as i128 - a.0 as i128);
    v.signum() as i64
}

fn segments_cross(cfg: &Configuration, e: (usize, usize), f: (usize, usize)) -> bool {
    if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
        return false;
    }
    match cfg.points() {
        None => {
            // convex position in index order: crossing iff endpoints interleave
            let inside = |x: usize| (e.0.min(e.1) < x) && (x < e.0.max(e.1));
            inside(f.0) != inside(f.1)
        }
        Some(p) => {
            let q = |i: usize| (p[i].x, p[i].y);
            orient(q(e.0), q(e.1), q(f.0)) * orient(q(e.0), q(e.1), q(f.1)) < 0
                && orient(q(f.0), q(f.1), q(e.0)) * orient(q(f.0), q(f.1), q(e.1)) < 0
        }
    }
}

fn conflict(cfg: &Configuration, a: &[usize], b: &[usize]) -> bool {
    if a.iter().any(|v| b.contains(v)) {
        return true;
    }
    let pairs = |s: &[usize]| {
        let mut v = Vec::new();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                v.push((s[i], s[j]));
            }
        }
        v
    };
    let (pa, pb) = (pairs(a), pairs(b));
    pa.iter().any(|&e| pb.iter().any(|&f| segments_cross(cfg, e, f)))
}

fn strictly_inside(cfg: &Configuration, t: [usize; 3], p: &RatPoint) -> bool {
    let pts = cfg.points().unwrap();
    let big = |v: i64| BigInt::from(v);
    let (px, py, w) = (BigInt::from(p.x), BigInt::from(p.y), BigInt::from(p.w));
    let side = |a: usize, b: usize| {
        let (a, b) = (pts[a], pts[b]);
        let v = (big(b.x) - big(a.x)) * (&py - big(a.y) * &w) - (big(b.y) - big(a.y)) * (&px - big(a.x) * &w);
        // w > 0 by construction of RatPoint
        assert!(w > BigInt::from(0));
        v.cmp(&BigInt::from(0)) as i32
    };
    let s = [side(t[0], t[1]), side(t[1], t[2]), side(t[2], t[0])];
    s.iter().all(|&x| x > 0) || s.iter().all(|&x| x < 0)
}

fn pair_counts(n: usize, blocks: impl Iterator<Item = Vec<usize>>) -> HashMap<(usize, usize), usize> {
    let mut m = HashMap::new();
    for b in blocks {
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                assert!(b[i] < n && b[j] < n);
                *m.entry((b[i].min(b[j]), b[i].max(b[j]))).or_insert(0) += 1;
            }
        }
    }
    m
}

fn exact_cover(d: &Decomposition) -> bool {
    let n = d.config.n();
    let m = pair_counts(n, d.parts.iter().map(|p| p.vertices.clone()));
    m.len() == n * (n - 1) / 2 && m.values().all(|&c| c == 1)
}

fn proper(d: &Decomposition, colors: &[usize]) -> usize {
    let mut by: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, &c) in colors.iter().enumerate() {
        by.entry(c).or_default().push(i);
    }
    let mut bad = 0;
    for class in by.values() {
        for (a, &i) in class.iter().enumerate() {
            for &j in &class[a + 1..] {
                if conflict(&d.config, &d.parts[i].vertices, &d.parts[j].vertices) {
                    bad += 1;
                }
            }
        }
    }
    bad
}

fn pairwise_stats(d: &Decomposition, fam: &[usize]) -> (usize, usize, usize) {
    let (mut conf, mut disj, mut total) = (0, 0, 0);
    for (a, &i) in fam.iter().enumerate() {
        for &j in &fam[a + 1..] {
            let (x, y) = (&d.parts[i].vertices, &d.parts[j].vertices);
            total += 1;
            conf += conflict(&d.config, x, y) as usize;
            disj += (x.iter().filter(|v| y.contains(v)).count() <= 1) as usize;
        }
    }
    (conf, disj, total)
}

/// Brute-force chromatic number: tries palettes 1, 2, ... with plain
/// backtracking, no ordering heuristics.
fn brute_chromatic(adj: &[Vec<bool>]) -> usize {
    fn go(adj: &[Vec<bool>], k: usize, col: &mut [usize], v: usize) -> bool {
        if v == adj.len() {
            return true;
        }
        let top = col[..v].iter().max().map_or(0, |m| m + 1);
        for c in 0..k.min(top + 1) {
            if (0..v).all(|u| !adj[u][v] || col[u] != c) {
                col[v] = c;
                if go(adj, k, col, v + 1) {
                    return true;
                }
            }
        }
        false
    }
    let m = adj.len();
    (1..=m.max(1)).find(|&k| go(adj, k, &mut vec![0; m], 0)).unwrap()
}

fn acceptance_1_sts9() {
    let s = sts9();
    let m = pair_counts(9, s.design.blocks.iter().cloned());
    let classes_ok = s.classes.iter().all(|cl| {
        let mut v: Vec<usize> = cl.iter().flatten().copied().collect();
        v.sort_unstable();
        v == (0..9).collect::<Vec<_>>() && cl.iter().all(|b| s.design.blocks.contains(&b.to_vec()))
    });
    let ok = s.design.blocks.len() == 12 && m.len() == 36 && m.values().all(|&c| c == 1) && classes_ok;
    report(1, ok, format!("blocks={} pairs={}", s.design.blocks.len(), m.len()));
    assert!(ok);
}

fn acceptance_2_thm4() {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in [9usize, 12, 15] {
        let d = thm4_construction(n).unwrap();
        let t = (n / 3) * (n / 3);
        let fam = d.metadata.distinguished.clone();
        let (conf, disj, total) = pairwise_stats(&d, &fam);
        let g = conflict_graph(&d);
        let w = clique_index(&g, 2_000_000).clique.len();
        let lower = exact_chromatic_index(&g, 200_000).lower;
        let good = fam.len() == t
            && fam.iter().all(|&i| d.parts[i].vertices.len() == 3)
            && conf == total
            && disj == total
            && w >= t
            && lower >= t
            && exact_cover(&d);
        ok &= good;
        detail.push(format!("n={n}:family={} clique={w} lower={lower}", fam.len()));
    }
    report(2, ok, detail.join(" "));
    assert!(ok);
}

fn acceptance_3_thm3() {
    let mut ok = true;
    let (mut conf_all, mut total_all) = (0, 0);
    for q in [3usize, 4] {
        for seed in 0..10u64 {
            let cfg = generate_general_position(7 * q + 6, DEFAULT_GEN_BOUND, seed).unwrap();
            let out = thm3_construction(&cfg, Some(q)).unwrap();
            let d = &out.decomposition;
            let fam = d.metadata.distinguished.clone();
            let (conf, disj, total) = pairwise_stats(d, &fam);
            conf_all += conf;
            total_all += total;
            let inside = fam.iter().all(|&i| {
                let t: Vec<usize> = d.parts[i].vertices.iter().copied().filter(|v| !out.strip.contains(v)).collect();
                t.len() == 3 && strictly_inside(&cfg, [t[0], t[1], t[2]], &out.center)
            });
            let good = fam.len() == 2 * q * q && disj == total && inside && exact_cover(d);
            if !good {
                println!(
                    "q={q} seed={seed}: family={} disjoint={disj}/{total} inside={inside} cover={}",
                    fam.len(),
                    exact_cover(d)
                );
            }
            ok &= good;
        }
    }
    let rate = conf_all as f64 / total_all as f64;
    ok &= conf_all == total_all;
    report(3, ok, format!("conflict_rate={:.4} ({conf_all}/{total_all})", rate));
    assert!(ok);
}

fn box1_class_size(k: usize) -> usize {
    let out = thm32_construction(k).unwrap();
    out.decomposition.coloring.as_ref().unwrap().iter().filter(|&&c| c == 0).count()
}

fn acceptance_4_thm32() {
    let out = thm32_construction(4).unwrap();
    let d = &out.decomposition;
    let m = pair_counts(73, d.parts.iter().map(|p| p.vertices.clone()));
    let design_ok = d.parts.len() == 876 && m.len() == 2628 && m.values().all(|&c| c == 1);
    let colors = d.coloring.as_ref().unwrap();
    let palette = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
    let bad = proper(d, colors);
    assert!(design_ok, "cyclic design");
    assert_eq!(palette, 219);
    assert_eq!(bad, 0);
    let class0 = box1_class_size(4);
    let class0_k8 = box1_class_size(8);
    report(
        4,
        class0 == 6,
        format!("design=ok palette={palette} violations={bad} box1_class(k=4)={class0} box1_class(k=8)={class0_k8}"),
    );
}

fn acceptance_5_thm33() {
    let out = thm32_construction(4).unwrap();
    let d = &out.decomposition;
    let colors = d.coloring.as_ref().unwrap();
    // independent census: boundary distance in the 73-gon; large iff the
    // shortest side m satisfies m >= n/x with x = 6 + 2*sqrt6.
    let x = 6.0 + 2.0 * 6f64.sqrt();
    let len = |a: usize, b: usize| {
        let g = a.abs_diff(b);
        g.min(73 - g)
    };
    let mut per: HashMap<usize, usize> = HashMap::new();
    for (i, p) in d.parts.iter().enumerate() {
        let v = &p.vertices;
        let short = len(v[0], v[1]).min(len(v[1], v[2])).min(len(v[0], v[2]));
        // m*x is irrational, so it never equals 73 and floats decide safely
        if short as f64 * x > 73.0 {
            *per.entry(colors[i]).or_default() += 1;
        }
    }
    let oracle_max = per.values().copied().max().unwrap_or(0);
    let c = triangle_census(d, colors, &QuadSurd::large_threshold()).unwrap();
    let v = evaluate_bound(73, &BoundVariant::Thm33).unwrap().to_f64();
    let expected = ((73.0 * 72.0 / 2.0) / 3.0 - 73.0f64.powi(2) / x) / (x - 2.0);
    let slack = v * 119.0 <= (73 * 73 + 73) as f64;
    let den = 60.0 + 24.0 * 6f64.sqrt();
    let ok = oracle_max <= 8
        && c.max_class_large == oracle_max
        && c.class_bound == 8
        && c.violations.is_empty()
        && (v - expected).abs() < 1e-9
        && slack
        && den < 119.0
        && thm33_denominator() < QuadSurd::integer(119, 6);
    report(5, ok, format!("max_large_per_class={oracle_max} value={v:.4} 60+24sqrt6={den:.4}"));
    assert!(ok);
}

fn acceptance_6_thm5() {
    let mut fractions = Vec::new();
    let mut fitted = Vec::new();
    for n in [100usize, 200, 400] {
        let cfg = generate_general_position(n, DEFAULT_GEN_BOUND, 0).unwrap();
        let (d, _) = thm5_construction(&cfg, DEFAULT_THRESHOLD).unwrap();
        assert!(exact_cover(&d), "n={n} cover");
        let colors = d.coloring.as_ref().unwrap();
        assert!(verify_coloring(&d, colors).is_empty(), "n={n} coloring");
        if n == 100 {
            assert_eq!(proper(&d, colors), 0, "oracle coloring check");
        }
        let palette = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
        let c = (palette as f64 - (n * n) as f64 / 9.0) / (n as f64).powf(1.5);
        assert!(c <= geochroma::experiment::THM5_C_MAX, "n={n} fitted C {c}");
        let singles = d.parts.iter().filter(|p| p.vertices.len() == 2).count();
        fractions.push(singles as f64 / (n * (n - 1) / 2) as f64);
        fitted.push(c);
    }
    let decreasing = fractions.windows(2).all(|w| w[1] < w[0]);
    report(6, decreasing, format!("cover=ok coloring=ok fitted_C={fitted:.3?} non_triangle_fraction={fractions:.3?}"));
}

fn acceptance_7_coloring_stack() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut ok = 0;
    for _ in 0..200 {
        let n = rand::Rng::gen_range(&mut rng, 4..=8);
        let d = random_packing(&mut rng, n);
        let m = d.parts.len();
        let adj: Vec<Vec<bool>> = (0..m)
            .map(|i| {
                (0..m).map(|j| i != j && conflict(&d.config, &d.parts[i].vertices, &d.parts[j].vertices)).collect()
            })
            .collect();
        let g = conflict_graph(&d);
        for (i, row) in adj.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                assert_eq!(g.adjacent(i, j), a);
            }
        }
        let w = clique_index(&g, 1_000_000).clique.len();
        let e = exact_chromatic_index(&g, 5_000_000);
        let greedy = greedy_color(&g).palette_size();
        let brute = brute_chromatic(&adj);
        assert!(e.optimal && w <= e.upper && e.upper <= greedy && e.upper == brute, "n={n}");
        ok += 1;
    }
    report(7, ok == 200, format!("instances={ok}/200"));
}

fn acceptance_8_edges() {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in 5..=9usize {
        let d = trivial_edge_decomposition(&Configuration::convex(n).unwrap()).unwrap();
        let r = exact_chromatic_index(&conflict_graph(&d), 2_000_000);
        assert_eq!(proper(&d, &r.coloring.colors), 0);
        ok &= r.lower >= n;
        detail.push(format!("n={n}:{}{}", r.lower, if r.optimal { "" } else { "+" }));
    }
    report(8, ok, detail.join(" "));
    assert!(ok);
}

fn acceptance_9_search() {
    let six = Configuration::convex(6).unwrap();
    let t = max_intersecting_family(&six, 3, 50_000_000).unwrap();
    let five = Configuration::convex(5).unwrap();
    let e = max_intersecting_family(&five, 2, 50_000_000).unwrap();
    let certified = |cfg: &Configuration, fam: &[Vec<usize>]| {
        let m = pair_counts(cfg.n(), fam.iter().cloned());
        m.values().all(|&c| c == 1)
            && fam.iter().enumerate().all(|(i, a)| fam[i + 1..].iter().all(|b| conflict(cfg, a, b)))
    };
    let ok = t.exact && e.exact && certified(&six, &t.family) && certified(&five, &e.family);
    report(
        9,
        ok,
        format!("n=6 triangles={} (reference (6/3)^2+eps) n=5 edges={} (reference 5)", t.family.len(), e.family.len()),
    );
    assert!(ok);
}

fn main() {
    let criteria: [(&str, fn()); 9] = [
        ("sts9", acceptance_1_sts9),
        ("thm4", acceptance_2_thm4),
        ("thm3", acceptance_3_thm3),
        ("thm32", acceptance_4_thm32),
        ("thm33", acceptance_5_thm33),
        ("thm5", acceptance_6_thm5),
        ("coloring", acceptance_7_coloring_stack),
        ("edges", acceptance_8_edges),
        ("search", acceptance_9_search),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut aborted = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|x| name.contains(x.as_str())) {
            continue;
        }
        if std::panic::catch_unwind(f).is_err() {
            println!("acceptance {}: FAIL hard assertion in {name}", i + 1);
            aborted.push(*name);
        }
    }
    if !aborted.is_empty() {
        eprintln!("hard assertions failed: {aborted:?}");
        std::process::exit(101);
    }
}
