//! One verdict line per acceptance criterion. Criterion 3 fails on the
//! transcribed tables and is expected to; the run exits non-zero unless
//! exactly the known set of criteria fails.

#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::Arc;

use common::*;
use homhopf::exactlin::{compose, invert, LinearMap};
use homhopf::format::{parse_definition, resolve};
use homhopf::h4::*;
use homhopf::hom_algebra::{check_automorphism, check_hom_hopf};
use homhopf::t_category::{check_t_category, AutPair};
use homhopf::yd_modules::*;
use homhopf::{Scalar, YdModule};

/// Criteria that fail on the data as printed.
const KNOWN_FAILING: [u32; 1] = [3];

struct Verdict {
    n: u32,
    title: &'static str,
    ok: bool,
    detail: String,
}

fn dense(m: &LinearMap<Scalar>) -> Mat {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn family(c: &Q, cp: &Q, cpp: &Q) -> H4Family<Scalar> {
    H4Family::new(&H4Params::new(c.clone(), cp.clone(), cpp.clone()).unwrap()).unwrap()
}

fn h4_validity() -> Verdict {
    let cs = [q(1), q(2), q(3), q(-1), frac(1, 2), frac(-2, 3)];
    let mut bad = Vec::new();
    let mut identities = 0;
    for c in &cs {
        let h = build_h4(c).unwrap();
        let r = check_hom_hopf(&h);
        identities += r.items.len();
        let o = OracleH4::new(c.clone());
        let s = h.antipode();
        let commutes = compose(s, h.alpha()).unwrap() == compose(h.alpha(), s).unwrap()
            && compose(s, h.alpha_inv()).unwrap() == compose(h.alpha_inv(), s).unwrap();
        if !r.all_passed() || !commutes || dense(h.mul()) != o.mul_matrix() || dense(h.comul()) != o.comul_matrix() {
            bad.push(c.to_string());
        }
    }
    Verdict {
        n: 1,
        title: "H4 validity",
        ok: bad.is_empty(),
        detail: format!("{} values of c, {identities} identities; failing c: {bad:?}", cs.len()),
    }
}

fn aut_group() -> Verdict {
    let ls = [q(1), q(2), frac(1, 3), q(-5)];
    let mut problems = Vec::new();
    for c in [q(1), q(2)] {
        let h = build_h4(&c).unwrap();
        for l in &ls {
            if !check_automorphism(&h, &h4_diag(l.clone(), l.clone())).all_passed() {
                problems.push(format!("diag({l},{l}) rejected at c={c}"));
            }
            for m in &ls {
                let prod = compose(&h4_diag(l.clone(), l.clone()), &h4_diag(m.clone(), m.clone())).unwrap();
                if prod != h4_diag(l * m, l * m) {
                    problems.push(format!("{l}·{m}"));
                }
                if l != m && check_automorphism(&h, &h4_diag(l.clone(), m.clone())).all_passed() {
                    problems.push(format!("diag({l},{m}) accepted at c={c}"));
                }
            }
        }
    }
    Verdict {
        n: 2,
        title: "Aut group",
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            "diag(1,1,l,l) for l in {1, 2, 1/3, -5} closed under composition; unequal diagonals rejected".into()
        } else {
            problems.join("; ")
        },
    }
}

fn yd_membership() -> Verdict {
    let grid = grid4();
    let (mut total, mut golden_pass, mut disagreements) = (0, 0, 0);
    let mut canonical_fail = 0;
    let mut first_failure = None;
    for c in &grid {
        for cp in &grid {
            for cpp in &grid {
                let f = family(c, cp, cpp);
                for which in H4Table::ALL {
                    let g = f.golden(which);
                    let (yd, alt) = (check_yd(&g), check_yd_alt(&g));
                    total += 1;
                    if yd.all_passed() && alt.all_passed() && check_yd_module(&g).all_passed() {
                        golden_pass += 1;
                    } else if first_failure.is_none() {
                        let id = yd
                            .failures()
                            .chain(alt.failures())
                            .next()
                            .map_or(String::new(), |i| i.id.clone());
                        first_failure = Some(format!("{which:?} at (c, c', c'') = ({c}, {cp}, {cpp}) fails {id}"));
                    }
                    let canon = f.canonical(which);
                    for m in [&g, &canon] {
                        if check_yd(m).all_passed() != check_yd_alt(m).all_passed() {
                            disagreements += 1;
                        }
                    }
                    if !check_yd_module(&canon).all_passed() {
                        canonical_fail += 1;
                    }
                }
            }
        }
    }
    Verdict {
        n: 3,
        title: "YD membership",
        ok: golden_pass == total && disagreements == 0,
        detail: format!(
            "transcribed tables pass {golden_pass}/{total}; first failure {}; \
             both YD forms agree on all {} instances: {}; constructive H_(A,B) fail {canonical_fail}/{total}",
            first_failure.unwrap_or_else(|| "none".into()),
            2 * total,
            disagreements == 0,
        ),
    }
}

fn sample_pairs() -> Vec<(Q, Q)> {
    let ls = [q(1), q(2), q(3), q(-1), frac(1, 2)];
    ls.iter()
        .flat_map(|a| ls.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

/// Carriers for the route comparisons: constructive and transcribed tables
/// over a few parameter triples.
fn carriers() -> Vec<YdModule> {
    let mut out = Vec::new();
    for (c, cp, cpp) in [
        (q(1), q(2), q(3)),
        (q(2), frac(1, 2), q(-1)),
        (frac(-1, 2), q(3), frac(3, 5)),
    ] {
        let f = family(&c, &cp, &cpp);
        for which in H4Table::ALL {
            out.push(f.canonical(which));
            out.push(f.golden(which));
        }
        out.push(f.twisted_h4b());
    }
    out
}

fn entwining() -> Verdict {
    let mut problems = Vec::new();
    for c in [q(1), q(2), frac(1, 2)] {
        let h = build_h4(&c).unwrap();
        for (la, lb) in sample_pairs() {
            let e = build_entwining(
                &h,
                &h4_automorphism(&h, &la).unwrap(),
                &h4_automorphism(&h, &lb).unwrap(),
            )
            .unwrap();
            if !check_entwining(&e).all_passed() {
                problems.push(format!("psi({la},{lb}) at c={c}"));
            }
        }
    }
    let cs = carriers();
    let mut agree = 0;
    for m in &cs {
        let e = build_entwining(&m.hopf_arc(), m.pair().a(), m.pair().b()).unwrap();
        if check_entwined_module(m.module(), m.comodule(), &e).all_passed() == check_yd(m).all_passed() {
            agree += 1;
        } else {
            problems.push(format!("entwined module disagrees on {}", m.label()));
        }
    }
    Verdict {
        n: 4,
        title: "Entwining",
        ok: problems.is_empty(),
        detail: format!(
            "75 entwinings checked; entwined-module verdict agrees with YD on {agree}/{} carriers {problems:?}",
            cs.len()
        ),
    }
}

fn bicomodule_route() -> Verdict {
    let mut problems = Vec::new();
    for c in [q(1), q(2), frac(1, 2)] {
        let h = Arc::new(build_h4(&c).unwrap());
        for (la, lb) in sample_pairs() {
            let n = build_bicomodule_algebra(
                &h,
                &h4_automorphism(&h, &la).unwrap(),
                &h4_automorphism(&h, &lb).unwrap(),
            )
            .unwrap();
            if !check_bicomodule_algebra(&n).all_passed() {
                problems.push(format!("bicomodule({la},{lb}) at c={c}"));
            }
        }
    }
    let cs = carriers();
    let mut agree = 0;
    for m in &cs {
        let n = build_bicomodule_algebra(&m.hopf_arc(), m.pair().a(), m.pair().b()).unwrap();
        let dm = as_datum_module(m, &n).unwrap();
        if check_yd_datum(&dm, m.comodule(), &n).all_passed() == check_yd(m).all_passed() {
            agree += 1;
        } else {
            problems.push(format!("datum disagrees on {}", m.label()));
        }
    }
    Verdict {
        n: 5,
        title: "Bicomodule route",
        ok: problems.is_empty(),
        detail: format!(
            "75 bicomodule algebras checked; datum verdict agrees with YD on {agree}/{} carriers {problems:?}",
            cs.len()
        ),
    }
}

fn t_category() -> Verdict {
    let ls = [q(2), q(3), frac(1, 2)];
    let mut problems = Vec::new();
    let mut identities = 0;
    for c in [q(1), q(2)] {
        let f = family(&c, &q(2), &q(3));
        let h = &f.hopf;
        let mut modules: Vec<YdModule> = H4Table::ALL.iter().map(|w| f.canonical(*w)).collect();
        modules.push(trivial_yd(h));
        let pairs: Vec<AutPair<Scalar>> = ls
            .iter()
            .flat_map(|a| ls.iter().map(move |b| (a, b)))
            .map(|(a, b)| AutPair::new(h4_automorphism(h, a).unwrap(), h4_automorphism(h, b).unwrap()))
            .collect();
        let r = check_t_category(h, &modules, &pairs, 11, 2);
        identities += r.items.len();
        problems.extend(r.failures().map(|i| format!("c={c}: {}", i.id)));
    }
    Verdict {
        n: 6,
        title: "T-category suite",
        ok: problems.is_empty(),
        detail: format!("{identities} identities over H4A, H4B, H4AB, k and 9 pairs, failing: {problems:?}"),
    }
}

fn matrix_d() -> Verdict {
    let skeleton = printed_d();
    let tuples = [
        (q(1), q(2), q(3)),
        (q(1), q(3), q(2)),
        (q(1), frac(1, 2), q(5)),
        (q(2), q(2), q(3)),
        (q(3), q(-1), q(2)),
        (q(-1), q(4), frac(1, 3)),
        (frac(1, 2), q(-2), q(7)),
        (frac(-2, 3), frac(5, 2), q(-3)),
        (q(5), frac(-1, 4), q(1)),
        (frac(3, 7), q(6), frac(-5, 2)),
    ];
    let (mut fixed_checked, mut problems) = (0, Vec::new());
    for (c, cp, cpp) in &tuples {
        let p = H4Params::new(c.clone(), cp.clone(), cpp.clone()).unwrap();
        let d = h4_braiding_matrix(&p).unwrap();
        let printed = printed_layout(&d);
        let cells = parameter_cells(cp);
        for i in 0..16 {
            for j in 0..16 {
                let got = printed.get(i, j);
                match skeleton[i][j] {
                    Some(v) => {
                        fixed_checked += 1;
                        if *got != q(v) {
                            problems.push(format!("({}, {}) = {got} at c'={cp}", i + 1, j + 1));
                        }
                    }
                    None => {
                        let want = &cells.iter().find(|(rc, _)| *rc == (i + 1, j + 1)).unwrap().1;
                        if got != want {
                            problems.push(format!("({}, {}) = {got}, oracle {want}", i + 1, j + 1));
                        }
                    }
                }
            }
        }
        let o = OracleH4::new(c.clone());
        let action = action_matrix(|hi, mi| common::canonical_action(&o, cp, &q(1), hi, mi));
        if dense(&d) != common::braiding(&o, &action, &q(1)) {
            problems.push(format!("oracle braiding differs at ({c}, {cp}, {cpp})"));
        }
        match invert(&d) {
            Ok(inv) if compose(&d, &inv).unwrap().is_identity() => {}
            _ => problems.push(format!("D not invertible at ({c}, {cp}, {cpp})")),
        }
    }
    Verdict {
        n: 7,
        title: "Matrix D reproduction",
        ok: problems.is_empty(),
        detail: format!(
            "{} tuples, {fixed_checked} fixed cells and {} parameter cells compared, D∘D⁻¹ = id; mismatches: {problems:?}",
            tuples.len(),
            4 * tuples.len()
        ),
    }
}

fn classical_limit() -> Verdict {
    let p = H4Params::new(q(1), q(1), q(1)).unwrap();
    let d = h4_braiding_matrix(&p).unwrap();
    let f = family(&q(1), &q(1), &q(1));
    let m = f.canonical(H4Table::H4AB);
    let via_modules = homhopf::t_category::braiding(&m, &m);
    let ok = dense(&d) == classical_braiding() && dense(via_modules.matrix()) == classical_braiding();
    Verdict {
        n: 8,
        title: "Classical limit",
        ok,
        detail: "c = 1, A = B = id against m⊗n ↦ n₀ ⊗ n₁·m".into(),
    }
}

fn parser_cli() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_homhopf");
    let mut problems = Vec::new();
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/h4.alg");
    let o = Command::new(bin)
        .args(["check", path, "--suite", "all"])
        .output()
        .unwrap();
    if o.status.code() != Some(0) {
        problems.push("check h4.alg did not exit 0".to_string());
    }

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, H4_FILE.replace("mul: x 1 -> c * x\n", "mul: x 1 -> 2 * c * x\n")).unwrap();
    let o = Command::new(bin)
        .args(["check", bad.to_str().unwrap()])
        .output()
        .unwrap();
    let out = String::from_utf8_lossy(&o.stdout);
    if o.status.code() != Some(1) || !out.contains("FAIL ") || !out.contains("at basis [") {
        problems.push(format!("corruption gave exit {:?}", o.status.code()));
    }

    let mut diagnostics = 0;
    for text in fuzz_inputs(0xacce, 10_000) {
        match parse_definition(&text) {
            Ok(file) => {
                let _ = resolve(&file);
            }
            Err(_) => diagnostics += 1,
        }
    }

    let args = ["--report", "json", "check", path, "--seed", "3"];
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin).args(args).output().unwrap();
    if a.stdout != b.stdout {
        problems.push("reports differ under a fixed seed".into());
    }
    Verdict {
        n: 9,
        title: "Parser/CLI",
        ok: problems.is_empty(),
        detail: format!("10000 fuzzed inputs without a crash ({diagnostics} diagnostics); {problems:?}"),
    }
}

fn main() {
    let verdicts = [
        h4_validity(),
        aut_group(),
        yd_membership(),
        entwining(),
        bicomodule_route(),
        t_category(),
        matrix_d(),
        classical_limit(),
        parser_cli(),
    ];
    for v in &verdicts {
        let status = if v.ok { "PASS" } else { "FAIL" };
        println!("criterion {} {status} {}: {}", v.n, v.title, v.detail);
    }
    let failing: BTreeSet<u32> = verdicts.iter().filter(|v| !v.ok).map(|v| v.n).collect();
    let known = BTreeSet::from(KNOWN_FAILING);
    if failing != known {
        eprintln!("failing criteria {failing:?}, expected {known:?}");
        std::process::exit(1);
    }
    println!("acceptance: failing criteria {failing:?} as expected");
}
