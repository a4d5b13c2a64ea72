use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;

use algcon::circulant::{circulant_graph, dft_spectrum, solve_problem2, CirculantSet};
use algcon::graph::{parse_edge_list, write_edge_list};
use algcon::neighborhood::{verify_lelm, verify_lelm_with, LelmOptions, LelmReport};
use algcon::partition_builder::{certify, Certificate, Certification, CertifyOptions};
use algcon::search::{are_isomorphic, search_canonical, search_labeled, DegreeCap};
use algcon::spectral::{self, INT_TOL};
use algcon::{choose2, rational, Graph, Partition};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::golden::{self, TableRow};
use crate::outcome::{fmt_l1, fmt_list, join, json_close, CommandOutcome};
use crate::{
    BruteArgs, CertifyArgs, CirculantArgs, Cli, Command, ComplementArgs, ConstructArgs, GoldenArgs, MethodArg,
    Problem2Args, VerifyArgs,
};

type CmdResult = Result<CommandOutcome, String>;

const SPECTRUM_TOL: f64 = 1e-6;
const COMPLEMENT_TOL: f64 = 1e-8;

fn usage(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Certify(a) => certify_cmd(a),
        Command::VerifyLelm(a) => verify(a, cli.tol.unwrap_or(INT_TOL)),
        Command::Brute(a) => brute(a),
        Command::Circulant(a) => circulant(a, cli.tol.unwrap_or(SPECTRUM_TOL)),
        Command::Problem2(a) => problem2(a, cli.tol.unwrap_or(SPECTRUM_TOL)),
        Command::Table(a) => table(a),
        Command::Examples(a) => examples(a),
        Command::ComplementCheck(a) => complement(a, cli.tol.unwrap_or(COMPLEMENT_TOL), cli.seed),
    }
}

fn summary(c: &Certification) -> String {
    let b = &c.build;
    let mut s = format!("{} | λ1={} | {}", join(b.partition.sizes(), ","), b.lambda1, c.status());
    if b.shortfall() > 0 {
        write!(s, " | m_actual={} (shortfall {})", b.m_actual, b.shortfall()).unwrap();
    }
    s
}

fn certificate_line(c: &Certificate) -> String {
    let mut s = format!("  {} {}", c.kind, c.basis);
    let d = &c.details;
    if let Some(lb) = d.lower_bound {
        write!(s, "; lower bound {lb}").unwrap();
    }
    if let Some(v) = &d.condition_value {
        write!(s, "; condition value {}", rational::display(v)).unwrap();
    }
    for extra in [&d.oracle, &d.note].into_iter().flatten() {
        write!(s, "; {extra}").unwrap();
    }
    s
}

fn lelm_lines(r: &LelmReport) -> String {
    let least = r.worst_neighbor_lambda1.map_or("none".into(), fmt_l1);
    let mut s = format!("neighbors {}, examined {}, least neighbor λ1={least}\n", r.neighborhood_size, r.examined);
    if let Some(stats) = &r.case_stats {
        writeln!(s, "  {:<18} {:>7} {:>8} {:>8}", "case", "count", "min λ1", "max λ1").unwrap();
        for (label, st) in stats {
            writeln!(
                s,
                "  {:<18} {:>7} {:>8} {:>8}",
                label.tag(),
                st.count,
                fmt_l1(st.min_lambda1),
                fmt_l1(st.max_lambda1)
            )
            .unwrap();
        }
    }
    match &r.violating_move {
        None => writeln!(s, "local minimality: pass (base λ1={})", fmt_l1(r.base_lambda1)).unwrap(),
        Some(mv) => writeln!(s, "local minimality: FAIL, {mv} lowers λ1 below {}", fmt_l1(r.base_lambda1)).unwrap(),
    }
    s
}

fn construct(a: &ConstructArgs) -> CmdResult {
    let cert = certify(a.n, a.m, &CertifyOptions::default()).map_err(usage)?;
    let b = &cert.build;
    let mut h = format!("{}\n", summary(&cert));
    writeln!(h, "  {:>4} {:>6} {:>11} {:>14}", "size", "copies", "edges left", "vertices left").unwrap();
    for st in &b.steps {
        writeln!(
            h,
            "  {:>4} {:>6} {:>11} {:>14}",
            st.size, st.count, st.edges_remaining_before, st.vertices_remaining_before
        )
        .unwrap();
    }
    let lelm = a.verify.then(|| verify_lelm(&b.graph()));
    if let Some(r) = &lelm {
        h.push_str(&lelm_lines(r));
    }
    if a.certify {
        for c in &cert.certificates {
            writeln!(h, "{}", certificate_line(c)).unwrap();
        }
    }
    let passed = lelm.as_ref().is_none_or(|r| r.verdict);
    let payload = json!({
        "summary": summary(&cert),
        "build": b,
        "status": cert.status(),
        "certificates": a.certify.then_some(&cert.certificates),
        "lelm": lelm,
    });
    Ok(CommandOutcome::new("construct", a, passed, payload, h))
}

fn certify_cmd(a: &CertifyArgs) -> CmdResult {
    let opts = CertifyOptions { use_oracle: a.oracle, verify_lelm: false };
    let cert = certify(a.n, a.m, &opts).map_err(usage)?;
    let mut h = format!("{}\n", summary(&cert));
    for c in &cert.certificates {
        writeln!(h, "{}", certificate_line(c)).unwrap();
    }
    let mut passed = true;
    match &cert.oracle {
        Some(r) => {
            writeln!(
                h,
                "oracle: min λ1={} ({}, {} graphs examined)",
                fmt_l1(r.min_lambda1),
                r.method,
                r.graphs_examined
            )
            .unwrap();
            if cert.build.m_actual == a.m {
                let built = cert.build.lambda1 as f64;
                let contradicts =
                    r.min_lambda1 > built + INT_TOL || (cert.is_legm() && r.min_lambda1 < built - INT_TOL);
                if contradicts {
                    passed = false;
                    writeln!(h, "oracle disagrees with the constructed value {built}").unwrap();
                }
            }
        }
        None if a.oracle => {
            writeln!(h, "oracle: not run (n = {} above {})", a.n, algcon::search::ORACLE_MAX_N).unwrap()
        }
        None => {}
    }
    Ok(CommandOutcome::new("certify", a, passed, &cert, h))
}

fn read_input(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(usage)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
    }
}

fn load_graph(file: Option<&Path>, row: Option<&str>) -> Result<Graph, String> {
    match (file, row) {
        (Some(p), _) => parse_edge_list(&read_input(p)?).map_err(usage),
        (_, Some(r)) => Ok(circulant_graph(&CirculantSet::from_row(r).map_err(usage)?)),
        _ => Err("no input graph given".into()),
    }
}

fn verify(a: &VerifyArgs, tol: f64) -> CmdResult {
    let g = match &a.partition {
        Some(sizes) => {
            let p = match a.n {
                Some(n) => Partition::padded(sizes.clone(), n),
                None => Partition::new(sizes.clone()),
            };
            Graph::union_of_complete(&p.map_err(usage)?)
        }
        None => load_graph(a.file.as_deref(), a.row.as_deref())?,
    };
    let r = verify_lelm_with(&g, &LelmOptions { tol, full_scan: a.full });
    let mut h = format!("graph n={} m={} λ1={}\n", g.n(), g.edge_count(), fmt_l1(r.base_lambda1));
    h.push_str(&lelm_lines(&r));
    let passed = r.verdict;
    Ok(CommandOutcome::new("verify-lelm", a, passed, json!({ "graph": g, "report": r }), h))
}

fn parse_cap(s: &str) -> Result<DegreeCap, String> {
    match s {
        "auto" => Ok(DegreeCap::Auto),
        "off" => Ok(DegreeCap::Off),
        _ => s.parse().map(DegreeCap::At).map_err(|_| format!("--cap expects auto, off or an integer, got {s:?}")),
    }
}

fn brute(a: &BruteArgs) -> CmdResult {
    let cap = parse_cap(&a.cap)?;
    let method = a.method.unwrap_or(if a.n <= 6 { MethodArg::Labeled } else { MethodArg::Canonical });
    let r = match method {
        MethodArg::Labeled if cap != DegreeCap::Auto => return Err("--cap applies to canonical search only".into()),
        MethodArg::Labeled => search_labeled(a.n, a.m),
        MethodArg::Canonical => search_canonical(a.n, a.m, cap),
    }
    .map_err(usage)?;
    let cap_text = r.degree_cap.map_or("no degree cap".into(), |c| format!("degree cap {c}"));
    let witness = write_edge_list(&r.witness);
    let h = format!(
        "min λ1={} over n={} m={} ({}, {cap_text})\nexamined {}, pruned {}, {} minimizer classes, {:.2?}\nwitness:\n{witness}",
        fmt_l1(r.min_lambda1),
        r.n,
        r.m,
        r.method,
        r.graphs_examined,
        r.pruned,
        r.minimizers.len(),
        r.elapsed,
    );
    Ok(CommandOutcome::new("brute", a, true, json!({ "report": r, "witness_edge_list": witness }), h))
}

fn max_deviation(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn circulant(a: &CirculantArgs, tol: f64) -> CmdResult {
    let set = CirculantSet::from_row(&a.row).map_err(usage)?;
    let dft = dft_spectrum(&set);
    let laplacian = dft.laplacian_eigenvalues();
    let eig = spectral::spectrum(&circulant_graph(&set)).values;
    let dev = max_deviation(&laplacian, &eig);
    let mut h = format!("n={} offsets {{{}}} degree {}\n", set.n(), join(set.offsets(), ","), set.degree());
    writeln!(h, "λ1: DFT {} eigensolver {} (max deviation {dev:.1e})", fmt_l1(dft.lambda1()), fmt_l1(eig[0])).unwrap();
    writeln!(h, "DFT values x_k: {}", fmt_list(&dft.x)).unwrap();
    writeln!(h, "Laplacian spectrum: {}", fmt_list(&eig)).unwrap();
    let payload = json!({
        "set": set,
        "row": set.row(),
        "dft": dft,
        "laplacian_from_dft": laplacian,
        "eigenvalues": eig,
        "max_deviation": dev,
    });
    Ok(CommandOutcome::new("circulant", a, dev <= tol, payload, h))
}

fn problem2(a: &Problem2Args, tol: f64) -> CmdResult {
    let sol = solve_problem2(a.n, a.d).map_err(usage)?;
    let laplacian = sol.spectrum.laplacian_eigenvalues();
    let eig = spectral::spectrum(&circulant_graph(&sol.set)).values;
    let dev = max_deviation(&laplacian, &eig);
    let mut h = format!("n={} d={}: offsets {{{}}}, row {}\n", a.n, a.d, join(sol.set.offsets(), ","), sol.set.row());
    writeln!(h, "min peak λ1={} over {} candidate sets", fmt_l1(sol.spectrum.peak), sol.candidates).unwrap();
    writeln!(h, "spectrum (DFT):        {}", fmt_list(&laplacian)).unwrap();
    writeln!(h, "spectrum (eigensolver): {}", fmt_list(&eig)).unwrap();
    let payload = json!({
        "set": sol.set,
        "row": sol.set.row(),
        "candidates": sol.candidates,
        "dft": sol.spectrum,
        "laplacian_from_dft": laplacian,
        "eigenvalues": eig,
        "max_deviation": dev,
    });
    Ok(CommandOutcome::new("problem2", a, dev <= tol, payload, h))
}

fn table(a: &GoldenArgs) -> CmdResult {
    let path = a.golden.clone().unwrap_or_else(|| golden::default_path("table1.txt"));
    let expected = golden::parse_table(&golden::read(&path)?)?;
    let mut built = Vec::new();
    for row in &expected {
        let c = certify(row.n, row.m, &CertifyOptions::default()).map_err(usage)?;
        built.push(TableRow {
            n: row.n,
            m: row.m,
            sizes: c.build.partition.non_singleton_sizes(),
            lambda1: c.build.lambda1,
            tag: c.status().to_string(),
        });
    }
    if a.bless {
        golden::write(&path, &golden::render_table(&built))?;
        let h = format!("wrote {} rows to {}\n", built.len(), path.display());
        let rows: Vec<String> = built.iter().map(TableRow::render).collect();
        return Ok(CommandOutcome::new("table", a, true, json!({ "blessed": rows }), h));
    }
    let mut h = String::new();
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for (want, got) in expected.iter().zip(&built) {
        let ok = want == got;
        if ok {
            writeln!(h, "{:<34} ok", got.render()).unwrap();
        } else {
            mismatches += 1;
            writeln!(h, "{:<34} MISMATCH\n  golden: {}", got.render(), want.render()).unwrap();
        }
        rows.push(json!({ "golden": want.render(), "built": got.render(), "match": ok }));
    }
    writeln!(h, "{} of {} rows match", rows.len() - mismatches, rows.len()).unwrap();
    Ok(CommandOutcome::new("table", a, mismatches == 0, json!({ "rows": rows, "mismatches": mismatches }), h))
}

#[derive(Debug, Serialize)]
struct ExampleBlock {
    name: &'static str,
    n: usize,
    m: usize,
    built_sizes: Vec<usize>,
    built_lambda1: usize,
    built_status: String,
    circulant_row: String,
    circulant_degree: usize,
    dft_lambda1: f64,
    eig_lambda1: f64,
    expected: f64,
    tolerance: f64,
    finding: String,
    passed: bool,
}

fn example_block(
    name: &'static str,
    m: usize,
    row: &str,
    expected: f64,
    tolerance: f64,
) -> Result<ExampleBlock, String> {
    let set = CirculantSet::from_row(row).map_err(usage)?;
    let n = set.n();
    let cert = certify(n, m, &CertifyOptions::default()).map_err(usage)?;
    let g = circulant_graph(&set);
    let dft_l1 = dft_spectrum(&set).peak;
    let eig_l1 = spectral::lambda1(&g);
    let built = cert.build.lambda1 as f64;
    let within = (dft_l1 - expected).abs() <= tolerance && (eig_l1 - expected).abs() <= tolerance;
    let (finding, holds) = if (eig_l1 - built).abs() <= INT_TOL {
        let distinct = !are_isomorphic(&g, &cert.build.graph());
        let text = format!(
            "circulant ties the {} value {}{}",
            cert.status(),
            fmt_l1(built),
            if distinct && cert.is_legm() { ", so the union is not the unique global minimizer" } else { "" }
        );
        (text, distinct && cert.is_legm())
    } else if eig_l1 < built {
        (format!("{} < {}: the local minimizer is not global", fmt_l1(eig_l1), fmt_l1(built)), true)
    } else {
        (format!("{} > {}: the union beats this circulant", fmt_l1(eig_l1), fmt_l1(built)), true)
    };
    Ok(ExampleBlock {
        name,
        n,
        m,
        built_sizes: cert.build.partition.non_singleton_sizes(),
        built_lambda1: cert.build.lambda1,
        built_status: cert.status().to_string(),
        circulant_row: set.row(),
        circulant_degree: set.degree(),
        dft_lambda1: dft_l1,
        eig_lambda1: eig_l1,
        expected,
        tolerance,
        finding,
        passed: within && holds && g.edge_count() == m,
    })
}

fn examples(a: &GoldenArgs) -> CmdResult {
    let blocks = vec![
        example_block("example 1", 18, "001011010", 6.0, 1e-6)?,
        example_block("example 2", 18, "000111100", 6.88, 0.01)?,
        example_block("example 3", 7, "0100001", 3.802, 0.001)?,
        example_block("example 4", 168, "000110111011011011101100", 17.0, 0.01)?,
    ];
    let payload = serde_json::to_value(&blocks).map_err(usage)?;
    let path = a.golden.clone().unwrap_or_else(|| golden::default_path("examples.json"));
    let mut h = String::new();
    for b in &blocks {
        writeln!(
            h,
            "{}: n={} m={} built {} λ1={} {}; circulant {} λ1 DFT {} / eig {} (expected {} ± {}); {} [{}]",
            b.name,
            b.n,
            b.m,
            join(&b.built_sizes, ","),
            b.built_lambda1,
            b.built_status,
            b.circulant_row,
            fmt_l1(b.dft_lambda1),
            fmt_l1(b.eig_lambda1),
            b.expected,
            b.tolerance,
            b.finding,
            if b.passed { "pass" } else { "FAIL" }
        )
        .unwrap();
    }
    let mut passed = blocks.iter().all(|b| b.passed);
    if a.bless {
        golden::write(&path, &(serde_json::to_string_pretty(&payload).map_err(usage)? + "\n"))?;
        writeln!(h, "wrote {}", path.display()).unwrap();
    } else {
        let stored: serde_json::Value =
            serde_json::from_str(&golden::read(&path)?).map_err(|e| format!("bad golden JSON: {e}"))?;
        let same = json_close(&stored, &payload, 1e-9);
        writeln!(h, "golden {}: {}", path.display(), if same { "match" } else { "MISMATCH" }).unwrap();
        passed &= same;
    }
    Ok(CommandOutcome::new("examples", a, passed, payload, h))
}

fn random_graph(n: usize, m: usize, seed: u64) -> Result<Graph, String> {
    let total = choose2(n);
    if m > total {
        return Err(usage(algcon::Error::TooManyEdges { n, m, max: total }));
    }
    let pairs: Vec<(usize, usize)> = Graph::empty(n).map_err(usage)?.pairs().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = rand::seq::index::sample(&mut rng, total, m);
    Graph::from_edges(n, picked.iter().map(|k| pairs[k])).map_err(usage)
}

fn complement(a: &ComplementArgs, tol: f64, seed: u64) -> CmdResult {
    let g = match a.random.as_deref() {
        Some(&[n, m]) => random_graph(n, m, seed)?,
        Some(_) => return Err("--random expects N M".into()),
        None => load_graph(a.file.as_deref(), a.row.as_deref())?,
    };
    let n = g.n();
    let s = spectral::spectrum(&g).values;
    let sc = spectral::spectrum(&g.complement()).values;
    let check = spectral::complement_relation_check(&g, tol);
    let mirrored: Vec<f64> = (1..n).map(|i| n as f64 - s[n - i - 1]).collect();
    let mut h = format!(
        "n={} m={}: max deviation {:.1e} (tol {tol:e}) {}\n",
        n,
        g.edge_count(),
        check.max_deviation,
        if check.holds { "holds" } else { "FAILS" }
    );
    if n >= 2 {
        writeln!(
            h,
            "algebraic connectivity of complement: {} = n - λ1(G) = {}",
            fmt_l1(sc[n - 2]),
            fmt_l1(n as f64 - s[0])
        )
        .unwrap();
    }
    writeln!(h, "spectrum G:          {}", fmt_list(&s)).unwrap();
    writeln!(h, "spectrum complement: {}", fmt_list(&sc)).unwrap();
    writeln!(h, "n - λ_(n-i)(G):      {}", fmt_list(&mirrored)).unwrap();
    let payload = json!({
        "graph": g,
        "spectrum": s,
        "complement_spectrum": sc,
        "check": check,
    });
    Ok(CommandOutcome::new("complement-check", json!({ "input": a, "seed": seed }), check.holds, payload, h))
}
