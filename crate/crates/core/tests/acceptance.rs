//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so that the lines are always printed; exits non-zero on any FAIL.

mod oracles;

use std::time::{Duration, Instant};

use prismatic_core::covering::{
    bounded_hitting_set, clique_cover, max_matching, min_clique_cover_oracle, min_hitting_set_branching,
    CoverBranch, CoverConfig, OracleLimits,
};
use prismatic_core::families::{
    canonical_coloring, core_ring_of_five, cycle_of_triangles, generate, is_schlafli_prismatic, line_k33,
    line_k33_column_coloring, line_k33_row_coloring, lk33_index, mantled_line_k33, path_of_triangles, prism,
    schlafli_complement, worn_chain_compose, ColoredGraph, FamilyKind, GoodPartition, MantledSpec, PartitionKind,
    TrianglesSpec, WornLinks,
};
use prismatic_core::recognition::{find_induced, is_cobridge_free, is_prismatic, three_coloring, Pattern, Verdict};
use prismatic_core::{Graph, GraphBuilder, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PINNED_LIMIT: Duration = Duration::from_secs(5);
const ORACLE_SUITE_LIMIT: Duration = Duration::from_secs(600);
const ORACLE_SUITE_MIN: usize = 200;
const ORACLE_SUITE_MAX_N: usize = 14;
const SWEEP_MIN: usize = 500;
const SWEEP_MAX_N: usize = 200;
const SWEEP_LARGE_N: usize = 150;
const PROPERTY_MIN: usize = 100;
const DISJOINT_MAX_N: usize = 12;
const MUTATION_MIN: usize = 1000;
const PERF_N: usize = 500;
const PERF_COVER_LIMIT: Duration = Duration::from_secs(60);
const PERF_HIT_LIMIT: Duration = Duration::from_secs(10);

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || format!("{what}: got {got:?}, expected {want:?}"))
}

/// Shapes of path and cycle specs whose outputs are often co-bridge-free:
/// (kind, longest path, largest optional set, cap on non-hat sets).
const SHAPES: [(PartitionKind, usize, usize, usize); 8] = [
    (PartitionKind::Path, 1, 99, 1),
    (PartitionKind::Path, 2, 60, 1),
    (PartitionKind::Path, 3, 40, 1),
    (PartitionKind::Path, 5, 30, 1),
    (PartitionKind::Path, 8, 20, 0),
    (PartitionKind::Path, 6, 2, 2),
    (PartitionKind::Cycle, 0, 0, 1),
    (PartitionKind::Cycle, 0, 1, 0),
];

fn shaped_spec(shape: usize, seed: u64) -> (PartitionKind, TrianglesSpec) {
    let (kind, len, part, cap) = SHAPES[shape % SHAPES.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = match kind {
        PartitionKind::Path => rng.gen_range(1..=len),
        PartitionKind::Cycle => *[5, 8].choose(&mut rng).expect("nonempty"),
    };
    let mut spec = TrianglesSpec::random(kind, n, part, rng.gen());
    for r in spec.rest.iter_mut() {
        *r = (*r).min(cap);
    }
    (kind, spec)
}

fn triangles_instance(kind: PartitionKind, spec: &TrianglesSpec) -> Option<(Graph, GoodPartition)> {
    match kind {
        PartitionKind::Path => path_of_triangles(spec).ok(),
        PartitionKind::Cycle => cycle_of_triangles(spec).ok(),
    }
}

fn random_induced(g: &Graph, size: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut vs: Vec<usize> = (0..g.n()).collect();
    vs.shuffle(rng);
    vs.truncate(size.min(g.n()));
    let s: VertexSet = vs.into_iter().collect();
    g.induced_subgraph(&s).expect("vertices in range").0
}

fn random_pair(n: usize, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    (u.min(v), u.max(v))
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let lambda = |g: &Graph| min_hitting_set_branching(g).len();
    let p = prism();
    expect_eq("lambda(prism)", lambda(&p), 2)?;
    expect_eq("brute lambda(prism)", oracles::lambda(&p), 2)?;

    let l = line_k33();
    expect_eq("lambda(L(K3,3))", lambda(&l), 3)?;
    let column: Vec<usize> = (1..=3).map(|i| lk33_index(i, 1)).collect();
    ensure(
        oracles::triangles(&l).iter().all(|t| t.iter().any(|v| column.contains(v))),
        || "a column of L(K3,3) misses a triangle".into(),
    )?;

    expect_eq("lambda(core ring of five)", lambda(&core_ring_of_five()), 3)?;
    let mantled = [
        ([1, 0, 0], [0, 1, 0], 0.5, 1),
        ([1, 1, 1], [1, 1, 1], 0.5, 2),
        ([2, 1, 0], [0, 2, 1], 0.3, 3),
    ];
    for (upper, lower, density, seed) in mantled {
        let g = mantled_line_k33(&MantledSpec {
            upper,
            lower,
            density,
            seed,
        })
        .map_err(|e| e.to_string())?;
        expect_eq("lambda(mantled L(K3,3))", lambda(&g), 3)?;
        expect_eq("brute lambda(mantled L(K3,3))", oracles::lambda(&g), 3)?;
    }

    let s = schlafli_complement();
    ensure(bounded_hitting_set(&s, 9).is_none(), || "Schlaefli complement has a 9-set".into())?;
    expect_eq(
        "hitting 10-set of the Schlaefli complement",
        bounded_hitting_set(&s, 10).map(|h| h.vertices.len()),
        Some(10),
    )?;

    let config = CoverConfig::default();
    let worn = worn_chain_compose(
        &[
            ColoredGraph::new(line_k33(), line_k33_column_coloring()).map_err(|e| e.to_string())?,
            ColoredGraph::new(line_k33(), line_k33_row_coloring()).map_err(|e| e.to_string())?,
        ],
        &WornLinks::default(),
    )
    .map_err(|e| e.to_string())?;
    let cases: [(&str, Graph, usize); 5] = [
        ("prism", p, 2),
        ("C5", Graph::cycle(5), 3),
        ("L(K3,3)", l, 3),
        ("Schlaefli complement", s, 9),
        ("two composed L(K3,3)", worn.graph().clone(), 6),
    ];
    for (name, g, want) in &cases {
        let (cover, report) = clique_cover(g, &config).map_err(|e| format!("{name}: {e}"))?;
        cover.validate(g).map_err(|e| format!("{name}: {e}"))?;
        expect_eq(&format!("cover size of {name}"), cover.size(), *want)?;
        if g.n() <= 20 {
            expect_eq(&format!("DP oracle cover of {name}"), oracles::clique_cover_size(g), *want)?;
        } else {
            // 27 vertices in parts of at most 3 need at least 9 parts.
            expect_eq("branch for the Schlaefli complement", report.branch, CoverBranch::SchlafliOracle)?;
            expect_eq("counting bound", g.n().div_ceil(3), *want)?;
        }
    }
    ensure(is_schlafli_prismatic(worn.graph()).is_some(), || {
        "two composed L(K3,3) are not Schlaefli-prismatic".into()
    })?;
    expect_eq("lambda(two composed L(K3,3))", lambda(worn.graph()), 6)?;

    let t = start.elapsed();
    ensure(t < PINNED_LIMIT, || format!("took {t:?}, limit {PINNED_LIMIT:?}"))?;
    Ok(format!("14 pinned values, {t:.2?} (limit {PINNED_LIMIT:?})"))
}

/// A generator output, an induced subgraph of one, or a single-pair
/// mutation of either, all with at most 14 vertices.
fn oracle_corpus_graph(seed: u64) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = *FamilyKind::ALL.choose(&mut rng).expect("families");
    let spec = kind.random_spec(rng.gen(), 2, 6);
    let g = generate(&spec).ok()?.graph;
    let mut g = if g.n() <= ORACLE_SUITE_MAX_N && rng.gen_bool(0.5) {
        g
    } else {
        let size = rng.gen_range(6..=ORACLE_SUITE_MAX_N);
        random_induced(&g, size, &mut rng)
    };
    if g.n() >= 2 && rng.gen_bool(0.35) {
        let (u, v) = random_pair(g.n(), &mut rng);
        g = g.with_edge_toggled(u, v).expect("in range");
    }
    Some(g)
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let (mut graphs, mut covers, mut mutated_or_sub) = (0, 0, 0);
    let config = CoverConfig::default();
    let mut seed = 0u64;
    while covers < ORACLE_SUITE_MIN + 40 {
        seed += 1;
        ensure(seed < 20_000, || format!("only {covers} comparable covers in 20000 draws"))?;
        let Some(g) = oracle_corpus_graph(seed) else { continue };
        graphs += 1;
        expect_eq(
            &format!("matching size, seed {seed}"),
            max_matching(&g).len(),
            oracles::matching_size(&g),
        )?;
        let lambda = oracles::lambda(&g);
        for k in 0..=6 {
            let found = bounded_hitting_set(&g, k);
            expect_eq(&format!("hitting set at k={k}, seed {seed}"), found.is_some(), lambda <= k)?;
        }
        if let Ok((cover, _)) = clique_cover(&g, &config) {
            cover.validate(&g).map_err(|e| format!("seed {seed}: {e}"))?;
            expect_eq(
                &format!("cover size, seed {seed}"),
                cover.size(),
                oracles::clique_cover_size(&g),
            )?;
            let exact = min_clique_cover_oracle(&g, &OracleLimits::default()).map_err(|e| e.to_string())?;
            expect_eq(&format!("library oracle, seed {seed}"), exact.size(), cover.size())?;
            covers += 1;
            if !is_prismatic(&g).is_yes() {
                mutated_or_sub += 1;
            }
        }
    }
    let t = start.elapsed();
    ensure(t < ORACLE_SUITE_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "{graphs} graphs (n <= {ORACLE_SUITE_MAX_N}), {covers} covers equal to the DP oracle \
         ({mutated_or_sub} non-prismatic), 0 mismatches, {t:.2?}"
    ))
}

fn criterion_3() -> Check {
    let mut counted = 0;
    let mut per_family = std::collections::BTreeMap::new();
    let mut largest = 0;
    let mut via_schlafli = 0;
    let mut seen = std::collections::HashSet::new();
    let mut seed = 0u64;
    while counted < SWEEP_MIN {
        seed += 1;
        ensure(seed < 50_000, || format!("only {counted} co-bridge-free instances"))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (name, g) = if seed.is_multiple_of(9) {
            let size = rng.gen_range(12..=27);
            ("schlafli subgraph", random_induced(&schlafli_complement(), size, &mut rng))
        } else if seed.is_multiple_of(3) {
            let kind = FamilyKind::ALL[rng.gen_range(0..6)];
            let spec = kind.random_spec(rng.gen(), 2, 6);
            match generate(&spec) {
                Ok(gen) => (spec.name(), gen.graph),
                Err(_) => continue,
            }
        } else {
            let (kind, spec) = shaped_spec(rng.gen(), rng.gen());
            match triangles_instance(kind, &spec) {
                Some((g, _)) => (kind.name(), g),
                None => continue,
            }
        };
        if !seen.insert((g.n(), g.edges())) || !is_prismatic(&g).is_yes() || !is_cobridge_free(&g).is_yes() {
            continue;
        }
        ensure(g.n() <= SWEEP_MAX_N, || format!("instance with {} vertices", g.n()))?;
        let small = bounded_hitting_set(&g, 5).is_some();
        if !small {
            ensure(is_schlafli_prismatic(&g).is_some(), || {
                format!("seed {seed} ({name}, n = {}): neither branch holds", g.n())
            })?;
            via_schlafli += 1;
        }
        if name == "path" || name == "cycle" {
            largest = largest.max(g.n());
        }
        *per_family.entry(name).or_insert(0) += 1;
        counted += 1;
    }
    ensure(largest >= SWEEP_LARGE_N, || format!("largest path/cycle instance has {largest} vertices"))?;
    Ok(format!(
        "{counted}/{counted} distinct instances satisfy the dichotomy ({via_schlafli} via Schlaefli membership); \
         largest path/cycle n = {largest}; per family {per_family:?}"
    ))
}

fn triangles_located(g: &Graph, p: &GoodPartition) -> bool {
    let n = p.n;
    let path = p.kind == PartitionKind::Path;
    let in_union = |t: &[usize; 3], sets: &[&VertexSet]| t.iter().all(|&v| sets.iter().any(|s| s.contains(v)));
    let empty = VertexSet::new();
    oracles::triangles(g).iter().all(|t| {
        (1..=n).any(|i| {
            let (e, lo, hi) = (2 * i, 2 * i - 1, 2 * i + 1);
            let first = p.hat(e).len() == 1 && in_union(t, &[p.r(lo), p.hat(e), p.l(hi)]);
            let before = if path && i == 1 { &empty } else { p.hat(e - 2) };
            first || in_union(t, &[before, p.m(lo), p.hat(e)])
        })
    })
}

fn middles_nonempty(p: &GoodPartition) -> bool {
    let last = match p.kind {
        PartitionKind::Path => p.n - 1,
        PartitionKind::Cycle => p.n,
    };
    (1..=last).all(|i| {
        let m = p.m(2 * i + 1);
        let singles = p.hat(2 * i).len() == 1 && p.hat(2 * i + 2).len() == 1;
        !m.is_empty() && ((m.len() == 1) == singles)
    })
}

fn ends_have_two(p: &GoodPartition) -> bool {
    let n = p.n;
    p.m(3).len() + p.l(3).len() >= 2 && p.m(2 * n - 1).len() + p.r(2 * n - 1).len() >= 2
}

/// A random 3-coloured graph on at most `max_n` vertices: a triangle-free
/// one, L(K3,3) by rows or columns, the prism, or a small path of
/// triangles with its canonical colouring.
fn random_term(rng: &mut ChaCha8Rng, max_n: usize) -> ColoredGraph {
    match rng.gen_range(0..5) {
        0 => {
            let n = rng.gen_range(1..=max_n.max(1));
            let colors: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let mut b = GraphBuilder::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if colors[u] != colors[v] && rng.gen_bool(0.4) {
                        b.add_edge(u, v).expect("in range");
                        if !oracles::triangles(&b.clone().build()).is_empty() {
                            b.remove_edge(u, v).expect("in range");
                        }
                    }
                }
            }
            let c = prismatic_core::recognition::Coloring::from_colors(colors).expect("colours below 3");
            ColoredGraph::new(b.build(), c).expect("proper by construction")
        }
        1 => ColoredGraph::new(line_k33(), line_k33_row_coloring()).expect("proper"),
        2 => ColoredGraph::new(line_k33(), line_k33_column_coloring()).expect("proper"),
        3 => {
            let g = prism();
            let c = three_coloring(&g).expect("small").expect("the prism is 3-colourable");
            ColoredGraph::new(g, c).expect("proper")
        }
        _ => loop {
            let spec = TrianglesSpec::random(PartitionKind::Path, rng.gen_range(1..=3), 1, rng.gen());
            if let Ok((g, p)) = path_of_triangles(&spec) {
                let c = canonical_coloring(&g, &p).expect("paths colour canonically");
                break ColoredGraph::new(g, c).expect("proper");
            }
        },
    }
}

/// Random links: each colour-permitted cross pair between vertices in no
/// triangle is dropped with probability 0.3.
fn random_links(terms: &[ColoredGraph], rng: &mut ChaCha8Rng) -> WornLinks {
    let mut info = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        let tri = t.graph().triangle_degrees();
        for v in 0..t.graph().n() {
            info.push((i, t.coloring().color(v), tri[v] == 0));
        }
    }
    let mut missing = Vec::new();
    for u in 0..info.len() {
        for v in u + 1..info.len() {
            let ((ti, cu, fu), (tj, cv, fv)) = (info[u], info[v]);
            if ti < tj && cv == (cu + 1) % 3 && fu && fv && rng.gen_bool(0.3) {
                missing.push((u, v));
            }
        }
    }
    WornLinks { missing }
}

fn criterion_4() -> Check {
    let mut lines = Vec::new();
    let mut suite = |name: &str, count: usize, failures: usize| -> Result<(), String> {
        ensure(count >= PROPERTY_MIN && failures == 0, || {
            format!("{name}: {failures} failures in {count} instances")
        })?;
        lines.push(format!("{name} {count}/{count}"));
        Ok(())
    };

    let mut instances = Vec::new();
    for seed in 0..200u64 {
        let kind = if seed % 2 == 0 { FamilyKind::Path } else { FamilyKind::Cycle };
        if let Ok(gen) = generate(&kind.random_spec(seed, 2, 6)) {
            instances.push((gen.graph, gen.partition.expect("path and cycle carry partitions")));
        }
    }
    let bad = instances.iter().filter(|(g, p)| !triangles_located(g, p)).count();
    suite("triangle location", instances.len(), bad)?;
    let bad = instances.iter().filter(|(_, p)| !middles_nonempty(p)).count();
    suite("M nonempty", instances.len(), bad)?;
    let paths: Vec<_> = instances
        .iter()
        .filter(|(_, p)| p.kind == PartitionKind::Path && p.n >= 2)
        .collect();
    let extra: Vec<_> = (0..200u64)
        .filter_map(|s| {
            let spec = TrianglesSpec::random(PartitionKind::Path, 2 + (s as usize % 6), 2, 1000 + s);
            path_of_triangles(&spec).ok()
        })
        .collect();
    let bad = paths.iter().filter(|(_, p)| !ends_have_two(p)).count() + extra.iter().filter(|(_, p)| !ends_have_two(p)).count();
    suite("|M_3 u L_3| >= 2", paths.len() + extra.len(), bad)?;

    let mut small = 0;
    let mut bad = 0;
    for seed in 0..5000u64 {
        let spec = TrianglesSpec::random(PartitionKind::Path, 1 + (seed as usize % 3), 1, seed);
        let Ok((g, _)) = path_of_triangles(&spec) else { continue };
        if g.n() > 9 {
            continue;
        }
        small += 1;
        if bounded_hitting_set(&g, 2).is_none() || oracles::lambda(&g) > 2 {
            bad += 1;
        }
        if small == 150 {
            break;
        }
    }
    suite("at most 9 vertices gives a 2-set", small, bad)?;

    let (mut count, mut bad) = (0, 0);
    for seed in 0..20_000u64 {
        let (kind, spec) = shaped_spec(seed as usize, seed);
        let Some((g, _)) = triangles_instance(kind, &spec) else { continue };
        if !is_cobridge_free(&g).is_yes() {
            continue;
        }
        count += 1;
        bad += usize::from(bounded_hitting_set(&g, 5).is_none());
        if count == 200 {
            break;
        }
    }
    suite("co-bridge-free path/cycle gives a 5-set", count, bad)?;

    let (mut count, mut bad) = (0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    while count < 300 {
        let kind = *FamilyKind::ALL.choose(&mut rng).expect("families");
        let Ok(gen) = generate(&kind.random_spec(rng.gen(), 2, 6)) else { continue };
        let size = rng.gen_range(3..=DISJOINT_MAX_N);
        let g = random_induced(&gen.graph, size, &mut rng);
        if !oracles::is_prismatic(&g) {
            continue;
        }
        count += 1;
        bad += usize::from((oracles::lambda(&g) >= 2) != oracles::has_two_disjoint_triangles(&g));
    }
    suite("two disjoint triangles iff lambda >= 2", count, bad)?;

    let (mut count, mut bad_tri, mut bad_prism) = (0, 0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    while count < 200 {
        let terms: Vec<ColoredGraph> = (0..rng.gen_range(2..=3)).map(|_| random_term(&mut rng, 7)).collect();
        let links = random_links(&terms, &mut rng);
        let w = worn_chain_compose(&terms, &links).map_err(|e| e.to_string())?;
        let g = w.graph();
        let mut expected = Vec::new();
        let mut offset = 0;
        for t in &terms {
            expected.extend(oracles::triangles(t.graph()).iter().map(|x| x.map(|v| v + offset)));
            offset += t.graph().n();
        }
        expected.sort();
        count += 1;
        bad_tri += usize::from(oracles::triangles(g) != expected);
        bad_prism += usize::from(!oracles::is_prismatic(g) || !w.coloring().is_proper(g));
    }
    suite("worn chain triangles stay in terms", count, bad_tri)?;
    suite("worn chain stays prismatic", count, bad_prism)?;

    let (mut count, mut bad) = (0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let two_triangles = || {
        [
            ColoredGraph::new(line_k33(), line_k33_row_coloring()).expect("proper"),
            ColoredGraph::new(prism(), three_coloring(&prism()).expect("small").expect("colourable")).expect("proper"),
        ]
    };
    while count < 150 {
        let spec = TrianglesSpec::random(PartitionKind::Path, rng.gen_range(2..=6), 2, rng.gen());
        let Ok((g, p)) = path_of_triangles(&spec) else { continue };
        if g.n() < 10 {
            continue;
        }
        let big = ColoredGraph::new(g.clone(), canonical_coloring(&g, &p).expect("path")).expect("proper");
        let small = two_triangles()[rng.gen_range(0..2)].clone();
        let terms = if rng.gen_bool(0.5) { [small, big] } else { [big, small] };
        let links = random_links(&terms, &mut rng);
        let w = worn_chain_compose(&terms, &links).map_err(|e| e.to_string())?;
        count += 1;
        match find_induced(w.graph(), Pattern::C4Plus2K1) {
            Some(c) if c.verify(w.graph()) => {}
            _ => bad += 1,
        }
    }
    suite("large term beside two triangles has a co-bridge", count, bad)?;
    Ok(lines.join("; "))
}

fn consecutive(p: &GoodPartition, a: usize, b: usize) -> bool {
    b == a + 1 || (p.kind == PartitionKind::Cycle && a == 1 && b == 2 * p.n)
}

fn two_apart_odd(p: &GoodPartition, a: usize, b: usize) -> bool {
    a % 2 == 1 && b % 2 == 1 && (b == a + 2 || (p.kind == PartitionKind::Cycle && a == 1 && b == 2 * p.n - 1))
}

/// Whether the adjacency of `u` and `v` is fixed by stability or the
/// distance rule regardless of any free choice.
fn forced(p: &GoodPartition, u: usize, v: usize) -> bool {
    let set = |x: usize| 1 + p.sets.iter().position(|s| s.contains(x)).expect("partition");
    let (mut a, mut b) = (set(u), set(v));
    let (mut u, mut v) = (u, v);
    if a > b {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut u, &mut v);
    }
    if a == b {
        return true;
    }
    if (b - a) % 3 != 2 {
        return !consecutive(p, a, b);
    }
    let rest = |x: usize, k: usize| k.is_multiple_of(2) && !p.hat(k).contains(x);
    !two_apart_odd(p, a, b) && !(rest(u, a) && rest(v, b))
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut mutations, mut certificates, mut forced_breaks) = (0, 0, 0);
    let patterns = [Pattern::C4Plus2K1, Pattern::Diamond, Pattern::K4, Pattern::Claw];
    while mutations < MUTATION_MIN + 200 {
        let kind = *FamilyKind::ALL.choose(&mut rng).expect("families");
        let Ok(gen) = generate(&kind.random_spec(rng.gen(), 2, 5)) else { continue };
        let g = &gen.graph;
        if g.n() < 3 {
            continue;
        }
        let toggle = rng.gen_bool(0.7);
        let (h, pair) = if toggle {
            let (u, v) = random_pair(g.n(), &mut rng);
            (g.with_edge_toggled(u, v).expect("in range"), Some((u, v)))
        } else {
            (g.without_vertex(rng.gen_range(0..g.n())).expect("in range").0, None)
        };
        mutations += 1;

        match is_prismatic(&h) {
            Verdict::Yes(()) => ensure(oracles::is_prismatic(&h), || "prismatic false accept".into())?,
            Verdict::No(c) => {
                ensure(c.verify(&h), || format!("prismatic certificate {c} does not re-validate"))?;
                ensure(!oracles::is_prismatic(&h), || "prismatic false reject".into())?;
                certificates += 1;
            }
        }
        for pat in patterns {
            if let Some(c) = find_induced(&h, pat) {
                ensure(c.verify(&h), || format!("{pat:?} certificate {c} does not re-validate"))?;
                certificates += 1;
            } else if pat == Pattern::C4Plus2K1 && h.n() <= 16 {
                ensure(!oracles::has_cobridge(&h), || "co-bridge missed".into())?;
            }
        }
        if let (Some(p), Some((u, v))) = (&gen.partition, pair) {
            let verdict = prismatic_core::families::verify_good_partition(&h, p).map_err(|e| e.to_string())?;
            if let Some(viol) = &verdict {
                ensure(viol.holds(&h, p), || format!("violation {viol} does not re-validate"))?;
                certificates += 1;
            }
            if forced(p, u, v) {
                forced_breaks += 1;
                ensure(verdict.is_some(), || format!("toggling forced pair ({u}, {v}) was accepted"))?;
            }
        }
    }
    Ok(format!(
        "{mutations} mutations, {certificates} certificates re-validated, \
         {forced_breaks} clause-breaking toggles all rejected"
    ))
}

fn criterion_6() -> Check {
    let (g, _) = path_of_triangles(&TrianglesSpec::padded_ladder(PERF_N, 0)).map_err(|e| e.to_string())?;
    expect_eq("instance size", g.n(), PERF_N)?;
    let start = Instant::now();
    let h = bounded_hitting_set(&g, 5);
    let hit = start.elapsed();
    ensure(h.is_some(), || "no hitting set of size 5".into())?;
    let start = Instant::now();
    let (cover, _) = clique_cover(&g, &CoverConfig::default()).map_err(|e| e.to_string())?;
    let cov = start.elapsed();
    cover.validate(&g).map_err(|e| e.to_string())?;
    ensure(hit < PERF_HIT_LIMIT, || format!("hitting set took {hit:?}"))?;
    ensure(cov < PERF_COVER_LIMIT, || format!("cover took {cov:?}"))?;
    Ok(format!(
        "n = {}, hitting set {hit:.2?} (limit {PERF_HIT_LIMIT:?}), cover of size {} in {cov:.2?} (limit {PERF_COVER_LIMIT:?})",
        g.n(),
        cover.size()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 6] = [
        ("pinned values", criterion_1),
        ("oracle equivalence", criterion_2),
        ("dichotomy sweep", criterion_3),
        ("structural properties", criterion_4),
        ("verifier soundness under mutation", criterion_5),
        ("smoke-scale performance", criterion_6),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{t:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why} [{t:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
