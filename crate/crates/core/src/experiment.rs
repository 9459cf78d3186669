//! Named experiment suites with machine-readable pass/fail reports.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::chroma::{
    clique_index, conflict_graph, evaluate_bound, exact_chromatic_index, greedy_color, max_intersecting_family,
    thm33_denominator, triangle_census, verify_coloring, verify_intersecting_family, BoundVariant, ConflictGraph,
    QuadSurd,
};
use crate::constructions::{
    thm32_construction, thm3_construction, thm4_construction, thm5_construction, trivial_edge_decomposition,
    validate_decomposition, Decomposition, Part, DEFAULT_THRESHOLD, TAG_TRIANGLE,
};
use crate::designs::{cyclic_sts, difference_triples, sts9, validate_design};
use crate::error::{GeoError, Result};
use crate::exactgeom::{generate_general_position, triangle_contains_strict, Configuration, Edge, DEFAULT_GEN_BOUND};

/// Largest constant accepted in `palette <= n^2/9 + C n^{3/2}`.
pub const THM5_C_MAX: f64 = 1.0;

pub const SUITES: &[&str] = &[
    "acceptance-sts9",
    "acceptance-thm4",
    "acceptance-thm3",
    "acceptance-thm32",
    "acceptance-thm33",
    "acceptance-thm5",
    "acceptance-coloring",
    "acceptance-edges",
    "acceptance-search",
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub elapsed_ms: u128,
    pub checks: Vec<Check>,
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, pass: bool, detail: Value) {
        self.0.push(Check { name: name.into(), pass, detail });
    }
}

/// Runs one suite, or every suite for `"all"`.
pub fn run(name: &str, seed: u64) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, seed)).collect();
    }
    Ok(vec![run_one(name, seed)?])
}

fn run_one(name: &str, seed: u64) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut c = Checks(Vec::new());
    match name {
        "acceptance-sts9" => suite_sts9(&mut c),
        "acceptance-thm4" => suite_thm4(&mut c)?,
        "acceptance-thm3" => suite_thm3(&mut c, seed)?,
        "acceptance-thm32" => suite_thm32(&mut c)?,
        "acceptance-thm33" => suite_thm33(&mut c)?,
        "acceptance-thm5" => suite_thm5(&mut c, seed)?,
        "acceptance-coloring" => suite_coloring(&mut c, seed),
        "acceptance-edges" => suite_edges(&mut c)?,
        "acceptance-search" => suite_search(&mut c)?,
        other => {
            return Err(GeoError::InvalidArgument(format!(
                "unknown suite {other:?}; known: all, {}",
                SUITES.join(", ")
            )))
        }
    }
    Ok(SuiteReport {
        suite: name.into(),
        pass: c.0.iter().all(|k| k.pass),
        elapsed_ms: start.elapsed().as_millis(),
        checks: c.0,
    })
}

fn suite_sts9(c: &mut Checks) {
    let s = sts9();
    let report = validate_design(&s.design);
    c.add("twelve blocks", s.design.blocks.len() == 12, json!(s.design.blocks.len()));
    c.add(
        "pairs covered once",
        report.is_valid(),
        json!({"uncovered": report.uncovered.len(), "repeated": report.repeated.len()}),
    );
    let classes_ok = s.classes.iter().all(|cl| {
        let mut v: Vec<usize> = cl.iter().flatten().copied().collect();
        v.sort_unstable();
        v == (0..9).collect::<Vec<_>>()
    });
    c.add("four parallel classes", classes_ok, json!(s.classes.len()));
}

fn pairwise(d: &Decomposition, idx: &[usize]) -> (usize, usize, usize) {
    let (mut conflicts, mut disjoint, mut total) = (0, 0, 0);
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            let (pi, pj) = (&d.parts[i].vertices, &d.parts[j].vertices);
            total += 1;
            if d.config.parts_conflict(pi, pj) {
                conflicts += 1;
            }
            if pi.iter().filter(|v| pj.contains(v)).count() <= 1 {
                disjoint += 1;
            }
        }
    }
    (conflicts, disjoint, total)
}

fn suite_thm4(c: &mut Checks) -> Result<()> {
    for n in [9, 12, 15] {
        let d = thm4_construction(n)?;
        let t = n / 3;
        let fam = d.metadata.distinguished.clone();
        let (conf, disj, total) = pairwise(&d, &fam);
        let g = conflict_graph(&d);
        let clique = clique_index(&g, 2_000_000);
        let chrom = exact_chromatic_index(&g, 200_000);
        c.add(format!("n={n} family size"), fam.len() == t * t, json!(fam.len()));
        c.add(format!("n={n} pairwise edge-disjoint"), disj == total, json!({"disjoint": disj, "pairs": total}));
        c.add(format!("n={n} pairwise conflicting"), conf == total, json!({"conflicting": conf, "pairs": total}));
        c.add(
            format!("n={n} clique index"),
            clique.clique.len() >= t * t,
            json!({"value": clique.clique.len(), "exact": clique.exact}),
        );
        c.add(
            format!("n={n} chromatic lower bound"),
            chrom.lower >= t * t,
            json!({"lower": chrom.lower, "upper": chrom.upper, "optimal": chrom.optimal}),
        );
    }
    Ok(())
}

fn suite_thm3(c: &mut Checks, seed: u64) -> Result<()> {
    for q in [3usize, 4] {
        for s in seed..seed + 10 {
            let n = 7 * q + 6;
            let cfg = generate_general_position(n, DEFAULT_GEN_BOUND, s)?;
            let out = match thm3_construction(&cfg, Some(q)) {
                Ok(o) => o,
                Err(e) => {
                    c.add(format!("q={q} seed={s} construction"), false, json!(e.to_string()));
                    continue;
                }
            };
            let d = &out.decomposition;
            let fam = d.metadata.distinguished.clone();
            let (conf, disj, total) = pairwise(d, &fam);
            let pts = cfg.points().expect("coordinates");
            let inside = fam.iter().all(|&i| {
                let t: Vec<usize> = d.parts[i].vertices.iter().copied().filter(|v| !out.strip.contains(v)).collect();
                t.len() == 3 && triangle_contains_strict(pts[t[0]], pts[t[1]], pts[t[2]], out.center)
            });
            let label = format!("q={q} seed={s}");
            c.add(format!("{label} exact cover"), validate_decomposition(d).is_valid(), Value::Null);
            c.add(format!("{label} family size"), fam.len() == 2 * q * q, json!(fam.len()));
            c.add(format!("{label} edge-disjoint"), disj == total, json!(disj));
            c.add(format!("{label} center inside triangles"), inside, Value::Null);
            c.add(
                format!("{label} conflict rate"),
                conf == total,
                json!({"rate": conf as f64 / total as f64, "conflicting": conf, "pairs": total}),
            );
        }
    }
    Ok(())
}

fn suite_thm32(c: &mut Checks) -> Result<()> {
    let table = difference_triples(4)?;
    let design = cyclic_sts(73, &table)?;
    let rep = validate_design(&design);
    c.add("876 blocks, all pairs once", design.blocks.len() == 876 && rep.is_valid(), json!(design.blocks.len()));
    let out = thm32_construction(4)?;
    let d = &out.decomposition;
    let colors = d.coloring.as_ref().expect("colored");
    let palette = d.palette_size().unwrap_or(0);
    c.add("palette n(k/2+1) = 219", palette == 219, json!(palette));
    let bad = verify_coloring(d, colors);
    c.add("coloring proper", bad.is_empty(), json!(bad.len()));
    let class0 = colors.iter().filter(|&&x| x == 0).count();
    c.add("box-1 rotation-0 class has 6 triangles", class0 == 6, json!(class0));
    Ok(())
}

fn suite_thm33(c: &mut Checks) -> Result<()> {
    let out = thm32_construction(4)?;
    let d = &out.decomposition;
    let x = QuadSurd::large_threshold();
    let census = triangle_census(d, d.coloring.as_ref().expect("colored"), &x)?;
    c.add(
        "large triangles per class <= 8",
        census.class_bound == 8 && census.violations.is_empty(),
        json!({"max": census.max_class_large, "bound": census.class_bound, "large": census.large}),
    );
    let n = 73usize;
    let v = evaluate_bound(n, &BoundVariant::Thm33)?;
    let lhs = v.scale(&num_rational::BigRational::from_integer(119.into()));
    let slack = QuadSurd::integer((n * n + n) as i64, 6);
    c.add("value*119 <= n^2 + n", lhs <= slack, json!({"value": v.to_f64()}));
    let den = thm33_denominator();
    c.add("60+24*sqrt6 < 119", den < QuadSurd::integer(119, 6), json!(den.to_f64()));
    Ok(())
}

fn suite_thm5(c: &mut Checks, seed: u64) -> Result<()> {
    let mut fractions = Vec::new();
    for n in [100usize, 200, 400] {
        let cfg = generate_general_position(n, DEFAULT_GEN_BOUND, seed)?;
        let (d, stats) = thm5_construction(&cfg, DEFAULT_THRESHOLD)?;
        let bad = verify_coloring(&d, d.coloring.as_ref().expect("colored"));
        let fitted = (stats.colors as f64 - (n * n) as f64 / 9.0) / (n as f64).powf(1.5);
        c.add(format!("n={n} exact cover"), validate_decomposition(&d).is_valid(), Value::Null);
        c.add(format!("n={n} coloring proper"), bad.is_empty(), json!(bad.len()));
        c.add(
            format!("n={n} palette <= n^2/9 + {THM5_C_MAX} n^1.5"),
            fitted <= THM5_C_MAX,
            json!({"colors": stats.colors, "fitted_c": fitted}),
        );
        fractions.push(stats.non_triangle_fraction);
    }
    let decreasing = fractions.windows(2).all(|w| w[1] < w[0]);
    c.add("non-triangle fraction strictly decreasing", decreasing, json!(fractions));
    Ok(())
}

/// Random convex instance: an edge-disjoint triangle packing plus the
/// remaining edges as singletons.
pub fn random_packing(rng: &mut ChaCha8Rng, n: usize) -> Decomposition {
    let cfg = Configuration::convex(n).expect("n >= 3");
    let mut tris = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for x in b + 1..n {
                tris.push([a, b, x]);
            }
        }
    }
    tris.shuffle(rng);
    let target = rng.gen_range(0..=n);
    let mut used = vec![false; n * (n - 1) / 2];
    let mut parts = Vec::new();
    for t in tris {
        if parts.len() >= target {
            break;
        }
        let es = [Edge::new(t[0], t[1]), Edge::new(t[0], t[2]), Edge::new(t[1], t[2])];
        if es.iter().any(|e| used[e.index()]) {
            continue;
        }
        es.iter().for_each(|e| used[e.index()] = true);
        parts.push(Part::new(t.to_vec(), TAG_TRIANGLE));
    }
    parts.extend(crate::constructions::leftover_edges(n, &used));
    let mut d = Decomposition::new(cfg, parts, "random-packing");
    d.canonicalize();
    d
}

/// Chromatic number by plain backtracking over palettes `1, 2, ...`.
pub fn brute_force_chromatic(g: &ConflictGraph) -> usize {
    fn fits(g: &ConflictGraph, k: usize, colors: &mut Vec<usize>, v: usize, used: usize) -> bool {
        if v == g.len() {
            return true;
        }
        for c in 0..(used + 1).min(k) {
            if (0..v).all(|u| !g.adjacent(u, v) || colors[u] != c) {
                colors[v] = c;
                if fits(g, k, colors, v + 1, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
    if g.is_empty() {
        return 0;
    }
    (1..=g.len()).find(|&k| fits(g, k, &mut vec![0; g.len()], 0, 0)).expect("m colors always suffice")
}

fn suite_coloring(c: &mut Checks, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut ok, mut failures) = (0, Vec::new());
    for i in 0..200 {
        let n = rng.gen_range(4..=8);
        let d = random_packing(&mut rng, n);
        let g = conflict_graph(&d);
        let clique = clique_index(&g, 1_000_000).clique.len();
        let exact = exact_chromatic_index(&g, 5_000_000);
        let greedy = greedy_color(&g).palette_size();
        let brute = brute_force_chromatic(&g);
        if exact.optimal && clique <= exact.upper && exact.upper <= greedy && exact.upper == brute {
            ok += 1;
        } else {
            failures.push(json!({"instance": i, "n": n, "clique": clique, "exact": exact.upper, "greedy": greedy, "brute": brute}));
        }
    }
    c.add(
        "clique <= exact <= greedy, exact = brute force",
        failures.is_empty(),
        json!({"passed": ok, "failures": failures}),
    );
}

fn suite_edges(c: &mut Checks) -> Result<()> {
    for n in 5..=9 {
        let d = trivial_edge_decomposition(&Configuration::convex(n)?)?;
        let r = exact_chromatic_index(&conflict_graph(&d), 2_000_000);
        c.add(
            format!("n={n} chromatic index >= n"),
            r.lower >= n,
            json!({"lower": r.lower, "upper": r.upper, "optimal": r.optimal}),
        );
    }
    Ok(())
}

fn suite_search(c: &mut Checks) -> Result<()> {
    let six = Configuration::convex(6)?;
    let tri = max_intersecting_family(&six, 3, 50_000_000)?;
    c.add(
        "n=6 triangles exact and certified",
        tri.exact && verify_intersecting_family(&six, &tri.family),
        json!({"size": tri.family.len(), "reference": 5, "family": tri.family}),
    );
    let five = Configuration::convex(5)?;
    let edg = max_intersecting_family(&five, 2, 50_000_000)?;
    c.add(
        "n=5 edges exact and certified",
        edg.exact && verify_intersecting_family(&five, &edg.family),
        json!({"size": edg.family.len(), "reference": 5, "family": edg.family}),
    );
    Ok(())
}
