//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use blowup_core::combinatorics::{chen_gap, f_bruteforce, f_formula, h_edges, matching_number, PartitionLabeling};
use blowup_core::constructions::{
    chvatal_hanson_graph, complete_multipartite, edge_blowup, extremal_family_layout,
    star, star_forest, turan,
};
use blowup_core::freeness::{find_blowup_star_forest, generic_contains, is_free};
use blowup_core::search::{
    isomorphic, spectral_extremal_bruteforce, turan_number_bruteforce, verify_theorem, SearchConfig,
};
use blowup_core::spectral::{eigen_residual, quotient_rho, spectral_radius};
use blowup_core::{Graph, SpectralConfig, StarForestSpec};
use blowup_lab::{decode_graph6, encode_graph6};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn spec(p: usize, ks: &[usize]) -> StarForestSpec {
    StarForestSpec::new(p, ks).unwrap()
}

fn random_graph(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn formula_vs_oracle() -> Outcome {
    for (nu, delta) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let brute = f_bruteforce(nu, delta, 7).map_err(|e| e.to_string())?;
        ensure(brute == f_formula(nu, delta), || format!("f({nu},{delta}): formula {} vs search {brute}", f_formula(nu, delta)))?;
    }
    ensure(f_formula(3, 3) == 10, || format!("f(3,3) = {}", f_formula(3, 3)))?;
    let g = chvatal_hanson_graph(3, 3).map_err(|e| e.to_string())?;
    let nu = matching_number(&g).map_err(|e| e.to_string())?;
    ensure(nu <= 3 && g.max_degree() <= 3 && g.edge_count() == 10, || {
        format!("chvatal_hanson(3,3): nu {nu}, max degree {}, {} edges", g.max_degree(), g.edge_count())
    })?;
    Ok("f matches search on {1,2}^2; f(3,3) = 10 realized".into())
}

fn turan_instance() -> Outcome {
    let cfg = SearchConfig::default();
    let s = spec(2, &[1]);
    for n in 4..=8 {
        let t = turan_number_bruteforce(n, &s, &cfg).map_err(|e| e.to_string())?;
        ensure(t.ex == n * n / 4, || format!("n = {n}: ex = {}", t.ex))?;
        let t2 = turan(2, n).unwrap();
        ensure(t.extremal.len() == 1 && isomorphic(&t.extremal[0], &t2).unwrap(), || {
            format!("n = {n}: {} extremal graphs", t.extremal.len())
        })?;
    }
    Ok("ex(n, K3) = floor(n^2/4) with Ex = {T2(n)} for n = 4..8".into())
}

fn spectral_instance() -> Outcome {
    let cfg = SearchConfig::default();
    let s = spec(2, &[1]);
    let mut worst: f64 = 0.0;
    for n in 4..=7 {
        let out = spectral_extremal_bruteforce(n, &s, &cfg).map_err(|e| e.to_string())?;
        let t2 = turan(2, n).unwrap();
        ensure(out.graphs.len() == 1 && isomorphic(&out.graphs[0].0, &t2).unwrap(), || {
            format!("n = {n}: {} spectral-extremal graphs", out.graphs.len())
        })?;
        let target = (((n / 2) * n.div_ceil(2)) as f64).sqrt();
        let err = (out.rho_max - target).abs();
        worst = worst.max(err);
        ensure(err <= 1e-8, || format!("n = {n}: rho {} vs {target}", out.rho_max))?;
    }
    Ok(format!("Ex_sp = {{T2(n)}} for n = 4..7, max root error {worst:.1e}"))
}

fn construction_grid() -> Outcome {
    let specs: [&[usize]; 6] = [&[1], &[2], &[3], &[2, 1], &[2, 2], &[3, 2]];
    let (mut checked, mut skipped) = (0, 0);
    for n in 8..=30 {
        for p in [2, 3] {
            for ks in specs {
                let s = spec(p, ks);
                let Ok(layout) = extremal_family_layout(n, &s) else {
                    skipped += 1;
                    continue;
                };
                let g = &layout.graph;
                let k = s.smallest_k();
                let bound = f_formula(k - 1, k - 1);
                let want = h_edges(n, p, s.q()).unwrap() + bound;
                ensure(is_free(g, &s), || format!("n = {n}, {s:?}: construction contains the pattern"))?;
                ensure(g.edge_count() == want, || format!("n = {n}, {s:?}: {} edges, want {want}", g.edge_count()))?;
                // natural partition: the Turán classes, joined clique removed
                let rest: Vec<usize> = layout.classes.iter().flatten().copied().collect();
                let offset = layout.core.len();
                let sub = Graph::new(
                    rest.len(),
                    &g.edges().filter(|&(u, v)| u >= offset && v >= offset).map(|(u, v)| (u - offset, v - offset)).collect::<Vec<_>>(),
                )
                .unwrap();
                let classes: Vec<Vec<usize>> =
                    layout.classes.iter().map(|c| c.iter().map(|v| v - offset).collect()).collect();
                let labeling = PartitionLabeling::from_classes(rest.len(), &classes).unwrap();
                let gap = chen_gap(&sub, &labeling).unwrap();
                ensure(gap <= bound as i64, || format!("n = {n}, {s:?}: gap {gap} > {bound}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} grid points free with h + f edges and gap <= f ({skipped} infeasible skipped)"))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let specs: [&[usize]; 6] = [&[1], &[2], &[3], &[1, 1], &[2, 1], &[1, 1, 1]];
    let (mut contained, mut free, mut fits) = (0, 0, 0);
    for trial in 0..1000 {
        let n = rng.random_range(1..=9);
        let host = random_graph(n, rng.random_range(0.2..0.95), &mut rng);
        let s = spec(rng.random_range(2..=3), specs[rng.random_range(0..specs.len())]);
        let pattern = edge_blowup(&star_forest(&s), s.p()).unwrap();
        fits += usize::from(pattern.n() <= n);
        let generic = generic_contains(&host, &pattern).map_err(|e| e.to_string())?;
        let special = find_blowup_star_forest(&host, &s);
        if let Some(w) = &special {
            ensure(w.verify(&host, &s), || format!("trial {trial}: bad witness"))?;
        }
        ensure(generic == special.is_some(), || format!("trial {trial}: generic {generic}, specialized {}", special.is_some()))?;
        if generic {
            contained += 1;
        } else {
            free += 1;
        }
    }
    Ok(format!("1000 random pairs agree ({contained} contain, {free} free, {fits} with the pattern no larger than the host)"))
}

fn spectral_properties() -> Outcome {
    let cfg = SpectralConfig::default();
    let rho = |g: &Graph| spectral_radius(g, &cfg).unwrap();
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-9;
    for n in 2..=12 {
        ensure(close(rho(&Graph::complete(n)).rho, (n - 1) as f64), || format!("K_{n}"))?;
        ensure(close(rho(&Graph::cycle(n + 1)).rho, 2.0), || format!("C_{}", n + 1))?;
        ensure(close(rho(&star(n).unwrap()).rho, (n as f64).sqrt()), || format!("K_1,{n}"))?;
        for b in 1..=6 {
            ensure(close(rho(&complete_multipartite(&[n, b])).rho, ((n * b) as f64).sqrt()), || format!("K_{n},{b}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst_residual: f64 = 0.0;
    for i in 0..10_000 {
        let n = rng.random_range(1..=40);
        let g = random_graph(n, rng.random_range(0.0..1.0), &mut rng);
        let r = rho(&g);
        ensure(r.converged, || format!("graph {i} did not converge"))?;
        let residual = eigen_residual(&g, &r).unwrap();
        worst_residual = worst_residual.max(residual / n as f64);
        ensure(residual <= 1e-8 * n as f64, || format!("graph {i}: residual {residual}"))?;
        let avg = 2.0 * g.edge_count() as f64 / n as f64;
        ensure(avg <= r.rho + 1e-9 && r.rho <= g.max_degree() as f64 + 1e-9, || {
            format!("graph {i}: rho {} outside [{avg}, {}]", r.rho, g.max_degree())
        })?;
    }
    let mut pairs = 0;
    while pairs < 1000 {
        let n = rng.random_range(2..=30);
        let g = random_graph(n, rng.random_range(0.0..0.9), &mut rng);
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let h = g.with_edge(u, v).unwrap();
        ensure(rho(&h).rho >= rho(&g).rho - 1e-9, || format!("adding {u}-{v} lowered the root"))?;
        pairs += 1;
    }
    Ok(format!("closed forms within 1e-9; 10^4 random graphs bounded, worst residual/n {worst_residual:.1e}; 10^3 monotone pairs"))
}

fn quotient_consistency() -> Outcome {
    let cfg = SpectralConfig::default();
    let mut points = Vec::new();
    for q in 1..=4usize {
        for parts in [vec![1, 1], vec![2, 3], vec![5, 5], vec![4, 9], vec![1, 12], vec![3, 3, 3], vec![2, 5, 7], vec![6, 6, 7], vec![1, 2, 3, 4], vec![8, 9, 9]]
        {
            if points.len() < 50 && q - 1 + parts.iter().sum::<usize>() <= 30 {
                points.push((q, parts));
            }
        }
    }
    for (q, parts) in [(5, vec![4, 4]), (6, vec![3, 7, 2]), (2, vec![14, 15]), (3, vec![9, 9, 9]), (7, vec![1, 1, 1, 1, 1, 1]),
        (2, vec![10, 10, 9]), (4, vec![13, 13]), (5, vec![2, 2, 2, 2]), (3, vec![27]), (8, vec![11, 11])]
    {
        if points.len() < 50 {
            points.push((q, parts));
        }
    }
    ensure(points.len() == 50, || format!("grid has {} points", points.len()))?;
    let mut worst_spread: f64 = 0.0;
    for (q, parts) in &points {
        let explicit = Graph::complete(q - 1).join(&complete_multipartite(parts));
        let full = spectral_radius(&explicit, &cfg).unwrap();
        let quotient = quotient_rho(q - 1, parts, &cfg).map_err(|e| e.to_string())?;
        ensure((quotient - full.rho).abs() <= 1e-8, || format!("q = {q}, parts {parts:?}: {quotient} vs {}", full.rho))?;
        let mut start = 0;
        for size in std::iter::once(q - 1).chain(parts.iter().copied()) {
            let entries = &full.vector[start..start + size];
            if let (Some(lo), Some(hi)) = (entries.iter().copied().reduce(f64::min), entries.iter().copied().reduce(f64::max)) {
                worst_spread = worst_spread.max(hi - lo);
            }
            start += size;
        }
    }
    ensure(worst_spread <= 1e-8, || format!("class entries spread {worst_spread}"))?;
    Ok(format!("50 grid points agree within 1e-8; class entry spread {worst_spread:.1e}"))
}

fn containment_probe() -> Outcome {
    let cfg = SearchConfig::default();
    let s = spec(2, &[2]);
    let mut notes = Vec::new();
    for n in [6, 7] {
        let r = verify_theorem(n, &s, &cfg).map_err(|e| e.to_string())?;
        let lower = n * n / 4 + 1;
        ensure(r.construction_edges == Some(lower), || format!("n = {n}: construction has {:?} edges", r.construction_edges))?;
        ensure(lower <= r.ex_brute, || format!("n = {n}: ex {} below construction {lower}", r.ex_brute))?;
        ensure(r.diagnostics.len() == r.spectral_extremal_graphs.len() && !r.extremal_graphs.is_empty(), || {
            format!("n = {n}: incomplete report")
        })?;
        notes.push(format!(
            "n={n}: ex={} formula={:?} |Ex|={} |Ex_sp|={} containment={} formula_matches={}",
            r.ex_brute,
            r.ex_formula_value,
            r.extremal_graphs.len(),
            r.spectral_extremal_graphs.len(),
            r.containment_holds,
            r.formula_matches
        ));
    }
    Ok(notes.join("; "))
}

fn interchange() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..10_000 {
        let n = rng.random_range(0..=62);
        let g = random_graph(n, rng.random_range(0.0..1.0), &mut rng);
        let s = encode_graph6(&g);
        ensure(decode_graph6(&s).as_ref() == Ok(&g), || format!("graph {i} (n = {n}) did not round-trip"))?;
    }
    let corpus = fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/graph6_corpus.tsv")).map_err(|e| e.to_string())?;
    let mut count = 0;
    for line in corpus.lines().filter(|l| !l.starts_with('#')) {
        let mut fields = line.split('\t');
        let n: usize = fields.next().unwrap().parse().unwrap();
        let reference = fields.next().unwrap();
        let edges: Vec<(usize, usize)> = fields
            .next()
            .unwrap_or("")
            .split_whitespace()
            .map(|e| {
                let (u, v) = e.split_once('-').unwrap();
                (u.parse().unwrap(), v.parse().unwrap())
            })
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        ensure(encode_graph6(&g) == reference, || format!("corpus line {count}: {} vs {reference}", encode_graph6(&g)))?;
        count += 1;
    }
    ensure(count == 100, || format!("corpus has {count} graphs"))?;
    Ok("10^4 random round trips; 100 pinned encodings byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("formula vs oracle", Duration::from_secs(60), formula_vs_oracle),
        ("Turán instance", Duration::from_secs(300), turan_instance),
        ("spectral Turán instance", Duration::from_secs(600), spectral_instance),
        ("construction soundness", Duration::from_secs(300), construction_grid),
        ("oracle equivalence", Duration::from_secs(600), oracle_equivalence),
        ("spectral engine properties", Duration::from_secs(600), spectral_properties),
        ("quotient consistency", Duration::from_secs(600), quotient_consistency),
        ("spectral vs edge extremal probe", Duration::from_secs(900), containment_probe),
        ("graph6 interchange", Duration::from_secs(600), interchange),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:.1?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {}  {name} ({elapsed:.1?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {}  {name} ({elapsed:.1?}): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
