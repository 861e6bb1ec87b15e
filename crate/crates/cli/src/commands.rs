//! One function per subcommand; each returns a finished report.

use std::fmt::Write as _;

use serde_json::{json, Value};

use artin_core::betti::{
    certify_krull_cohomology, hochster_betti, koszul_tor_oracle, krull_dim_cohomology, krull_dim_homology, BettiTable,
    KrullDim,
};
use artin_core::catalog;
use artin_core::cm::{
    cartan_concentration, cartan_profile, duality_check, eagon_reiner, gorenstein_fk_check, linear_resolution_check,
    reisner_witness, vanishing_range_check,
};
use artin_core::cover::{cover_homology as cover_hilbert, compact_support_cohomology, euler_by_weight, SliceKind};
use artin_core::exterior::{is_regular_sequence, link_formula_cohomology, ExteriorSRRing};
use artin_core::format::write_complex;
use artin_core::homology::{reduced_homology, reduced_integral_cohomology, HomologyProfile};
use artin_core::{growth_degree, Coefficients, CoordinateMap, Field, Growth, Simplex, SimplicialComplex};

use crate::input::Loaded;
use crate::report::{InputEcho, Report};
use crate::InputError;

type Outcome = Result<Report, InputError>;

fn echo(loaded: &Loaded) -> InputEcho {
    let k = &loaded.complex;
    InputEcho {
        source: loaded.source.clone(),
        n: k.n(),
        facets: k.facets().into_iter().map(Simplex::to_vec).collect(),
    }
}

fn finish(mut report: Report, loaded: &Loaded, field: Option<String>) -> Report {
    report.input = Some(echo(loaded));
    report.field = field;
    report
}

fn parse_coords(spec: Option<&str>, k: &SimplicialComplex) -> Result<CoordinateMap, InputError> {
    let f = match spec {
        Some(s) => s.parse::<CoordinateMap>().map_err(|e| InputError(format!("--coords: {e}")))?,
        None => CoordinateMap::identity(k.n()),
    };
    f.check_domain(k).map_err(|e| InputError(format!("--coords: {e}")))?;
    Ok(f)
}

fn torsion_values(profile: &HomologyProfile, q: isize) -> Result<Vec<u64>, InputError> {
    profile
        .torsion(q)
        .iter()
        .map(|t| u64::try_from(t).map_err(|_| InputError(format!("torsion coefficient {t} exceeds 64 bits"))))
        .collect()
}

fn torsion_text(t: &[u64]) -> String {
    if t.is_empty() {
        "-".into()
    } else {
        t.iter().map(|v| format!("Z/{v}")).collect::<Vec<_>>().join(" + ")
    }
}

pub fn homology(loaded: Loaded, ring: Coefficients, verify: bool) -> Outcome {
    let k = &loaded.complex;
    if k.is_void() {
        return Err(InputError("the void complex has no faces".into()));
    }
    let profile = reduced_homology(k, ring);
    let mut text = String::from("reduced homology\n   q  rank  torsion\n");
    let mut degrees = Vec::new();
    for q in -1..=profile.max_degree() {
        let torsion = torsion_values(&profile, q)?;
        let _ = writeln!(text, "{q:>4}  {:>4}  {}", profile.rank(q), torsion_text(&torsion));
        degrees.push(json!({ "q": q, "rank": profile.rank(q), "torsion": torsion }));
    }
    let mut report = Report::new("homology", json!({ "degrees": degrees }), text);
    if verify {
        match ring {
            Coefficients::Integer => {
                // H^q has the rank of H_q and the torsion of H_{q-1}
                let co = reduced_integral_cohomology(k);
                let bad = (-1..=profile.max_degree())
                    .find(|&q| co.rank(q) != profile.rank(q) || co.torsion(q) != profile.torsion(q - 1));
                let detail = match bad {
                    None => "universal coefficients against the cochain complex".to_string(),
                    Some(q) => format!("degree {q}: cochain rank {} torsion {:?}", co.rank(q), co.torsion(q)),
                };
                report.check("universal-coefficients", bad.is_none(), detail);
            }
            _ => {
                let from_faces: i64 = k.f_vector().iter().enumerate().map(|(i, &c)| sign(i as i64 - 1) * c as i64).sum();
                let from_homology: i64 = (-1..=profile.max_degree()).map(|q| sign(q as i64) * profile.rank(q) as i64).sum();
                report.check(
                    "euler-characteristic",
                    from_faces == from_homology,
                    format!("faces {from_faces}, homology {from_homology}"),
                );
            }
        }
    }
    Ok(finish(report, &loaded, Some(ring.to_string())))
}

fn sign(p: i64) -> i64 {
    if p.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn betti_json(t: &BettiTable) -> Value {
    let entries: Vec<Value> = t.nonzero().map(|((p, q), v)| json!({ "p": p, "q": q, "value": v })).collect();
    json!({ "entries": entries, "projective_dimension": t.projective_dimension() })
}

pub fn betti(loaded: Loaded, field: Field) -> Outcome {
    let k = &loaded.complex;
    let table = hochster_betti(k, field)?;
    let oracle = koszul_tor_oracle(k, field)?;
    let text = format!("Betti table of k[K] (row q, column p; beta_(p, p+q))\n{table}");
    let mut report = Report::new("betti", betti_json(&table), text);
    let detail = if table == oracle { String::new() } else { format!("Koszul oracle gives\n{oracle}") };
    report.check("koszul-oracle", table == oracle, detail);
    Ok(finish(report, &loaded, Some(field.to_string())))
}

fn krull_json(d: KrullDim) -> Value {
    match d {
        KrullDim::ZeroModule => Value::Null,
        KrullDim::Dim(d) => json!(d),
    }
}

pub fn krull(loaded: Loaded, field: Field, q: i64, cohomology: bool, max_degree: i64, verify: bool) -> Outcome {
    let k = &loaded.complex;
    if max_degree < 0 {
        return Err(InputError(format!("--max-degree must be nonnegative, got {max_degree}")));
    }
    let report = if !cohomology {
        let (dim, witness) = krull_dim_homology(k, q, field)?;
        let mut text = format!("Krull dimension of H_{q} of the universal abelian cover: {dim}\n");
        if let Some(w) = witness {
            let _ = writeln!(text, "witness: induced subcomplex on {w}");
        }
        let result = json!({ "kind": "homology", "q": q, "dimension": krull_json(dim), "witness": witness });
        let mut report = Report::new("krull", result, text);
        if verify {
            let h = cover_hilbert(k, &CoordinateMap::identity(k.n()), field, q, max_degree)?;
            let g = growth_degree(&h);
            report.check("growth-degree", dim.agrees_with(g), format!("Hilbert function {h}, growth {g}"));
        }
        report
    } else {
        // the readings are always certified against the chain level
        let cert = certify_krull_cohomology(k, field, max_degree as usize)?;
        let chosen = cert.chosen();
        let mut text = String::new();
        let mut result = json!({
            "kind": "cohomology",
            "q": q,
            "certified": cert.certified,
            "chosen_reading": chosen,
            "discrepancies": cert.discrepancies(),
        });
        if let Some(r) = chosen {
            let (dim, witness) = krull_dim_cohomology(k, q, field, r)?;
            let _ = writeln!(text, "Krull dimension of H^{q}(G, k[Z^n]): {dim} ({r} reading)");
            if let Some(w) = witness {
                let _ = writeln!(text, "witness face: {w}");
            }
            result["dimension"] = krull_json(dim);
            result["witness"] = json!(witness);
        } else {
            let _ = writeln!(text, "no reading of the link formula matches the chain level");
        }
        for line in cert.discrepancies() {
            let _ = writeln!(text, "discrepancy: {line}");
        }
        let mut report = Report::new("krull", result, text);
        let certified: Vec<String> = cert.certified.iter().map(|r| r.to_string()).collect();
        report.check("chain-level", chosen.is_some(), format!("certified readings: {}", certified.join(", ")));
        report
    };
    Ok(finish(report, &loaded, Some(field.to_string())))
}

fn parse_vertices(spec: &str, flag: &str) -> Result<Simplex, InputError> {
    let vertices = spec
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| InputError(format!("{flag}: `{t}` is not a vertex"))))
        .collect::<Result<Vec<_>, _>>()?;
    Simplex::from_vertices(&vertices).map_err(|e| InputError(format!("{flag}: {e}")))
}

pub fn rank_variety(loaded: Loaded, field: Field, supp: &str) -> Outcome {
    let k = &loaded.complex;
    let supp = parse_vertices(supp, "--supp")?;
    if !supp.is_subset_of(Simplex::full(k.n())) {
        return Err(InputError(format!("--supp: {supp} is not inside 1..={}", k.n())));
    }
    let ring = ExteriorSRRing::new(k, field)?;
    let direct = ring.mult_cohomology(&ring.support_sum(supp)?)?;
    let formula = link_formula_cohomology(k, supp, field)?;
    let text = format!(
        "cohomology of multiplication by the sum of e_i over {supp}, degrees 0..\n  direct:       {direct}\n  link formula: {formula}\n"
    );
    let result = json!({ "support": supp, "direct": direct, "link_formula": formula });
    let mut report = Report::new("rank-variety", result, text);
    report.check("link-formula", direct == formula, "");
    Ok(finish(report, &loaded, Some(field.to_string())))
}

pub fn regular_seq(loaded: Loaded, field: Field, coords: &str) -> Outcome {
    let k = &loaded.complex;
    let f = parse_coords(Some(coords), k)?;
    let r = is_regular_sequence(k, &f, field)?;
    let mut text = format!("fiber sums of f = ({f})\n");
    let mut steps = Vec::new();
    for (i, (&ok, h)) in r.steps.iter().zip(&r.cohomology).enumerate() {
        let verdict = if ok { "regular" } else { "not regular" };
        let _ = writeln!(text, "  h_{}: {verdict}, cohomology {h}", i + 1);
        steps.push(json!({ "j": i + 1, "regular": ok, "cohomology": h }));
    }
    let _ = writeln!(text, "regular sequence: {}", if r.is_regular() { "yes" } else { "no" });
    let result = json!({ "coords": f, "steps": steps, "regular": r.is_regular() });
    let mut report = Report::new("regular-seq", result, text);
    // the first step is multiplication on k<K> itself
    let first = link_formula_cohomology(k, f.fiber(1), field)?;
    report.check("first-step-link-formula", r.cohomology.first() == Some(&first), format!("link formula {first}"));
    Ok(finish(report, &loaded, Some(field.to_string())))
}

fn growth_json(g: Growth) -> Value {
    serde_json::to_value(g).expect("serializable")
}

pub fn cover_homology(
    loaded: Loaded,
    field: Field,
    coords: Option<&str>,
    q: i64,
    max_degree: i64,
    compact: bool,
    verify: bool,
) -> Outcome {
    let k = &loaded.complex;
    let f = parse_coords(coords, k)?;
    let (kind, h) = if compact {
        (SliceKind::CompactSupport, compact_support_cohomology(k, &f, field, q, max_degree)?)
    } else {
        (SliceKind::Homology, cover_hilbert(k, &f, field, q, max_degree)?)
    };
    let g = growth_degree(&h);
    let name = if compact { format!("H^{q}_c") } else { format!("H_{q}") };
    let mut text = format!("{name} of the cover for f = ({f}), by polynomial degree j\n   j  dim\n");
    for (j, v) in h.values().iter().enumerate() {
        let _ = writeln!(text, "{j:>4}  {v}");
    }
    let _ = writeln!(text, "growth degree: {g}");
    let result = json!({
        "kind": if compact { "compact_support" } else { "homology" },
        "q": q,
        "coords": f,
        "max_degree": max_degree,
        "hilbert": h,
        "growth": growth_json(g),
    });
    let mut report = Report::new("cover-homology", result, text);
    if verify {
        let rows = euler_by_weight(k, &f, field, kind, max_degree)?;
        let bad = rows.iter().find(|r| r.chain != r.homology);
        let detail = match bad {
            None => format!("{} weight pieces", rows.len()),
            Some(r) => format!("weight {}: chains {}, (co)homology {}", r.weight, r.chain, r.homology),
        };
        report.check("euler-characteristic", bad.is_none(), detail);
    }
    Ok(finish(report, &loaded, Some(field.to_string())))
}

pub fn cm_check(loaded: Loaded, field: Field, max_degree: i64) -> Outcome {
    let k = &loaded.complex;
    let witness = reisner_witness(k, field)?;
    let er = eagon_reiner(k, field)?;
    let cartan = cartan_concentration(&cartan_profile(k, field, max_degree)?);
    let reisner_ok = witness.is_none();
    let verdict = if reisner_ok { "Cohen-Macaulay" } else { "not Cohen-Macaulay" };
    let reisner_text = match &witness {
        None => "pass".to_string(),
        Some(w) => format!("fail at σ={}", w.face),
    };
    let er_text = if er.linear { "linear resolution" } else { "nonlinear resolution" };
    let cartan_text = match cartan {
        Ok(()) => "concentrated in top degree".to_string(),
        Err((p, j)) => format!("H^{p} nonzero in degree {j}"),
    };
    let text = format!("{verdict} over {field} (Reisner: {reisner_text}; Eagon-Reiner: {er_text}; Cartan: {cartan_text})\n");
    let result = json!({
        "cohen_macaulay": reisner_ok,
        "reisner": { "pass": reisner_ok, "witness": witness },
        "eagon_reiner": { "linear": er.linear, "syzygy_rows": er.syzygy_rows },
        "cartan": { "concentrated": cartan.is_ok(), "max_degree": max_degree, "first_offending": cartan.err() },
    });
    let mut report = Report::new("cm-check", result, text);
    report.check("eagon-reiner", er.linear == reisner_ok, "");
    report.check("cartan", cartan.is_ok() == reisner_ok, format!("through degree {max_degree}"));
    Ok(finish(report, &loaded, Some(field.to_string())))
}

pub fn duality(loaded: Loaded, field: Field, coords: Option<&str>, q: Option<i64>, max_degree: i64) -> Outcome {
    let k = &loaded.complex;
    let f = parse_coords(coords, k)?;
    let d = k.dim();
    let qs: Vec<usize> = match q {
        Some(q) => vec![usize::try_from(q).map_err(|_| InputError(format!("--q must be nonnegative, got {q}")))?],
        None => (0..=(d + 2).max(0) as usize).collect(),
    };
    let r = duality_check(k, &f, field, &qs, max_degree)?;
    let mut text = format!("H^q_c of the cover for f = ({f}) against Tor_(d+1-q)(F_K, R), d = {d}\n");
    for c in &r.comparisons {
        let idx = c.tor_index.map_or("-".to_string(), |i| i.to_string());
        let shift = c.alignment.shift.map_or("-".to_string(), |s| s.to_string());
        let verdict = if c.alignment.agree { "agree" } else { "differ" };
        let _ = writeln!(text, "  q={}: H^q_c {}  Tor_{idx} {}  shift {shift}  {verdict}", c.q, c.compact, c.tor);
    }
    let shifts = r.shifts();
    let off_top = r.off_top_nonzero();
    if !off_top.is_empty() {
        let _ = writeln!(text, "nonzero off q = d+1 at q = {off_top:?}");
    }
    let mut result = json!({
        "d": d,
        "coords": f,
        "max_degree": max_degree,
        "comparisons": r.comparisons,
        "shifts": shifts,
        "off_top_nonzero": off_top,
    });
    let mut report = Report::new("duality", Value::Null, text);
    report.check("tor", r.agree(), "");
    report.check("constant-shift", shifts.len() <= 1, format!("measured shifts {shifts:?}"));
    if k.is_flag() {
        let v = vanishing_range_check(k, &f, field, max_degree)?;
        result["vanishing_range"] = json!(v);
        let detail = format!("checked q in {:?}", v.checked);
        report.check("vanishing-range", v.holds(), detail);
    }
    report.result = result;
    Ok(finish(report, &loaded, Some(field.to_string())))
}

pub fn gorenstein(loaded: Loaded, field: Field, max_degree: i64) -> Outcome {
    let k = &loaded.complex;
    let r = gorenstein_fk_check(k, field, max_degree)?;
    let lin = linear_resolution_check(k, field, max_degree)?;
    let shift = r.alignment.shift.map_or("-".to_string(), |s| s.to_string());
    let mut text = format!("F_K: {}\nI_(K*): {}\nmeasured shift: {shift}\n", r.fk, r.ideal);
    let _ = writeln!(text, "Tor_i(F_K, k) by Cartan degree:");
    for (i, h) in lin.tor.iter().enumerate() {
        let _ = writeln!(text, "  i={i}: {h}");
    }
    let twist = lin.shift.map_or("-".to_string(), |s| s.to_string());
    let _ = writeln!(text, "matched against the exterior dual ideal with u - i = {twist}");
    let result = json!({
        "fk": r.fk,
        "ideal": r.ideal,
        "shift": r.alignment.shift,
        "linear_resolution": lin,
    });
    let mut report = Report::new("gorenstein", result, text);
    report.check("hilbert-functions", r.alignment.agree, "");
    report.check("linear-resolution", lin.concentrated && lin.shift.is_some(), "");
    Ok(finish(report, &loaded, Some(field.to_string())))
}

pub fn dual(loaded: Loaded, verify: bool) -> Outcome {
    let k = &loaded.complex;
    let dual = k.alexander_dual()?;
    let text = write_complex(&dual).map_err(|_| InputError("the Alexander dual of the full simplex is void".into()))?;
    let facets: Vec<Vec<usize>> = dual.facets().into_iter().map(Simplex::to_vec).collect();
    let mut report = Report::new("dual", json!({ "n": dual.n(), "facets": facets }), text);
    if verify {
        report.check("double-dual", dual.alexander_dual()? == *k, "");
    }
    report.input = Some(echo(&loaded));
    Ok(report)
}

pub fn catalog(name: Option<&str>) -> Outcome {
    match name {
        None => {
            let mut text = String::new();
            let mut entries = Vec::new();
            for e in catalog::entries() {
                let _ = writeln!(text, "{:<20} {}", e.name, e.description);
                entries.push(json!({ "name": e.name, "description": e.description }));
            }
            let _ = writeln!(text, "{:<20} full simplex on n vertices, also delta(n)", "delta<n>");
            Ok(Report::new("catalog", json!({ "entries": entries }), text))
        }
        Some(name) => {
            let k = catalog::get(name).ok_or_else(|| InputError(format!("unknown catalog entry `{name}`")))?;
            let text = write_complex(&k)?;
            let facets: Vec<Vec<usize>> = k.facets().into_iter().map(Simplex::to_vec).collect();
            Ok(Report::new("catalog", json!({ "name": name, "n": k.n(), "facets": facets }), text))
        }
    }
}
