//! Subcommand implementations. Each returns a report and whether the
//! command succeeded in the verification sense.

use std::time::{Duration, Instant};

use cyclo_core::coeff::{self, coeff_naive, engine_agreement, CoeffQuery, Engine};
use cyclo_core::partitions::coeff_series_via_partitions;
use cyclo_core::stats::{self, Route};
use cyclo_core::tables::{self, TABLE_IDS};
use serde_json::{json, Value};

use crate::output::Report;
use crate::{AverageArgs, BenchArgs, CoeffArgs, EmpiricalArgs, Failure, KminArgs, Suite, TableArgs, VerifyArgs};

pub type Outcome = Result<(Report, bool), Failure>;

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn series(n: u64, eps: coeff::Sign, big_k: u64, engine: Engine) -> Result<Vec<i64>, Failure> {
    Ok(match engine {
        Engine::Naive => coeff_naive(n, eps, big_k as usize)?.values,
        Engine::Gt => (0..=big_k)
            .map(|k| CoeffQuery::new(n, k, eps).map(coeff::coeff_gt))
            .collect::<Result<_, _>>()?,
        Engine::Partition => coeff_series_via_partitions(n, eps, big_k)?,
    })
}

pub fn coeff(a: &CoeffArgs) -> Outcome {
    let engines: Vec<Engine> = if a.engine == "all" {
        Engine::ALL.to_vec()
    } else {
        vec![a.engine.parse()?]
    };
    let q = CoeffQuery::new(a.n, a.k, a.eps)?;
    if let Some(big_k) = a.series {
        let all: Vec<(Engine, Vec<i64>)> = engines
            .iter()
            .map(|&e| series(a.n, a.eps, big_k, e).map(|s| (e, s)))
            .collect::<Result<_, _>>()?;
        let agree = all.windows(2).all(|w| w[0].1 == w[1].1);
        let mut header = vec!["k"];
        header.extend(engines.iter().map(|e| match e {
            Engine::Naive => "naive",
            Engine::Gt => "gt",
            Engine::Partition => "partition",
        }));
        let values: serde_json::Map<String, Value> =
            all.iter().map(|(e, s)| (e.to_string(), json!(s))).collect();
        let mut r = Report::new(
            "cyclo.series/v1",
            json!({"n": a.n, "eps": a.eps.to_i64(), "order": big_k, "values": values, "agree": agree}),
            header,
        );
        for k in 0..=big_k as usize {
            let mut row = vec![k.to_string()];
            row.extend(all.iter().map(|(_, s)| s[k].to_string()));
            r.row(row);
        }
        return Ok((r, agree));
    }
    let values: Vec<(Engine, i64)> = engines
        .iter()
        .map(|&e| coeff::coeff(q, e).map(|v| (e, v)))
        .collect::<Result<_, _>>()?;
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let mut body = json!({"n": a.n, "k": a.k, "eps": a.eps.to_i64()});
    if values.len() == 1 {
        body["engine"] = json!(values[0].0.to_string());
        body["value"] = json!(values[0].1);
    } else {
        body["values"] = values
            .iter()
            .map(|(e, v)| (e.to_string(), json!(v)))
            .collect::<serde_json::Map<_, _>>()
            .into();
        body["agree"] = json!(agree);
    }
    let mut r = Report::new("cyclo.coeff/v1", body, vec!["n", "k", "eps", "engine", "value"]);
    for (e, v) in &values {
        r.row([a.n.to_string(), a.k.to_string(), a.eps.to_string(), e.to_string(), v.to_string()]);
    }
    Ok((r, agree))
}

pub fn table(a: &TableArgs) -> Outcome {
    let rows = tables::compute_table(a.id, a.kmax)?;
    let mut r = Report::new(
        "cyclo.table/v1",
        json!({"table_id": a.id, "rows": rows.iter().map(|row| json!({
            "row_key": row.row_key,
            "col_key": row.col_key,
            "value": row.value,
        })).collect::<Vec<_>>()}),
        vec!["table_id", "row_key", "col_key", "value"],
    );
    for row in &rows {
        r.row([
            row.table_id.to_string(),
            row.row_key.clone(),
            row.col_key.clone(),
            row.value.to_string(),
        ]);
    }
    Ok((r, true))
}

struct SuiteResult {
    name: &'static str,
    passed: bool,
    body: Value,
    rows: Vec<Vec<String>>,
}

fn suite_tables() -> Result<SuiteResult, Failure> {
    let mut rows = Vec::new();
    let mut bodies = Vec::new();
    let mut passed = true;
    for id in TABLE_IDS {
        let c = tables::compare_table(id)?;
        passed &= c.passed();
        let detail = c
            .mismatches
            .iter()
            .map(|(row, col, e, g)| format!("{row}/{col}: expected {e:?}, computed {g:?}"))
            .collect::<Vec<_>>()
            .join("; ");
        rows.push(vec![
            "tables".into(),
            format!("table_{id}"),
            String::new(),
            c.passed().to_string(),
            detail,
        ]);
        bodies.push(to_json(&c));
    }
    Ok(SuiteResult {
        name: "tables",
        passed,
        body: json!({"tables": bodies}),
        rows,
    })
}

fn suite_identities(kmax: u64) -> Result<SuiteResult, Failure> {
    let report = stats::verify_identities(kmax)?;
    let rows = report
        .checks
        .iter()
        .map(|c| {
            vec![
                "identities".into(),
                c.name.to_string(),
                c.k.to_string(),
                c.passed.to_string(),
                c.detail.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let failures: Vec<Value> = report.failures().into_iter().map(to_json).collect();
    let mut names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
    names.sort_unstable();
    names.dedup();
    let summary: serde_json::Map<String, Value> = names
        .iter()
        .map(|&n| {
            let count = report.checks.iter().filter(|c| c.name == n).count();
            (n.to_string(), json!({"checked": count, "passed": report.passed(n)}))
        })
        .collect();
    Ok(SuiteResult {
        name: "identities",
        passed: report.all_passed(),
        body: json!({
            "kmax": kmax,
            "checks": summary,
            "failures": failures,
            "seesaw_violations": report.seesaw.violations,
            "seesaw_values": report.seesaw.values,
        }),
        rows,
    })
}

fn suite_engines(nmax: u64, kmax: u64) -> Result<SuiteResult, Failure> {
    let r = engine_agreement(nmax, kmax)?;
    let passed = r.disagreements.is_empty();
    let rows = vec![vec![
        "engines".into(),
        "engine_agreement".into(),
        kmax.to_string(),
        passed.to_string(),
        format!("{} triples, {} disagreements", r.compared, r.disagreements.len()),
    ]];
    Ok(SuiteResult {
        name: "engines",
        passed,
        body: to_json(&r),
        rows,
    })
}

pub fn verify(a: &VerifyArgs) -> Outcome {
    let want = |s: Suite| a.suite == Suite::All || a.suite == s;
    let mut results = Vec::new();
    if want(Suite::Tables) {
        results.push(suite_tables()?);
    }
    if want(Suite::Identities) {
        results.push(suite_identities(a.kmax.unwrap_or(40))?);
    }
    if want(Suite::Engines) {
        results.push(suite_engines(a.nmax, a.kmax.unwrap_or(20))?);
    }
    let passed = results.iter().all(|s| s.passed);
    let suites: Vec<Value> = results
        .iter()
        .map(|s| json!({"suite": s.name, "passed": s.passed, "report": s.body}))
        .collect();
    let mut r = Report::new(
        "cyclo.verify/v1",
        json!({"passed": passed, "suites": suites}),
        vec!["suite", "check", "k", "passed", "detail"],
    );
    for s in results {
        for row in s.rows {
            r.row(row);
        }
    }
    Ok((r, passed))
}

pub fn kmin(a: &KminArgs) -> Outcome {
    let (lo, hi) = match (&a.target.v, &a.target.range) {
        (Some(v), _) => (*v, *v),
        (None, Some(r)) => (r[0], r[1]),
        (None, None) => return Err(Failure::Usage("give --v or --range".into())),
    };
    let results = stats::kmin_range(lo, hi, a.ceiling)?;
    let mut entries = Vec::new();
    let mut r = Report::new("cyclo.kmin/v1", Value::Null, vec!["v", "k_min", "n", "error"]);
    let mut ok = true;
    let mut max_k = 0;
    for (v, res) in (lo..=hi).zip(results) {
        match res {
            Ok(e) => {
                max_k = max_k.max(e.k);
                r.row([v.to_string(), e.k.to_string(), e.n.to_string(), String::new()]);
                entries.push(json!({"v": v, "k_min": e.k, "n": e.n}));
            }
            Err(err) => {
                ok = false;
                r.row([v.to_string(), String::new(), String::new(), err.to_string()]);
                entries.push(json!({"v": v, "error": err.to_string()}));
            }
        }
    }
    r.body = json!({"ceiling": a.ceiling, "max_k_min": max_k, "entries": entries});
    Ok((r, ok))
}

fn time_it<T>(repeat: u32, mut f: impl FnMut() -> T) -> (Duration, Duration) {
    let mut total = Duration::ZERO;
    let mut best = Duration::MAX;
    for _ in 0..repeat.max(1) {
        let t = Instant::now();
        std::hint::black_box(f());
        let el = t.elapsed();
        total += el;
        best = best.min(el);
    }
    (total / repeat.max(1), best)
}

pub fn bench(a: &BenchArgs) -> Outcome {
    if a.k == 0 {
        return Err(Failure::Usage("k must be positive".into()));
    }
    let names: Vec<String> = if a.engine.is_empty() {
        Route::applicable(a.k).iter().map(|r| r.to_string()).collect()
    } else {
        a.engine.clone()
    };
    let mut r = Report::new(
        "cyclo.bench/v1",
        Value::Null,
        vec!["kind", "name", "k", "repeat", "mean_ms", "best_ms"],
    );
    let mut entries = Vec::new();
    for name in &names {
        let (kind, mean, best) = match name.as_str() {
            "naive" | "gt" | "partition-engine" => {
                let engine = match name.as_str() {
                    "naive" => Engine::Naive,
                    "gt" => Engine::Gt,
                    _ => Engine::Partition,
                };
                let mut err = None;
                let (mean, best) = time_it(a.repeat, || {
                    for n in 1..=a.nmax {
                        for eps in coeff::Sign::BOTH {
                            if let Err(e) = series(n, eps, a.k, engine) {
                                err = Some(e);
                            }
                        }
                    }
                });
                if let Some(e) = err {
                    return Err(e);
                }
                ("coeff_engine", mean, best)
            }
            other => {
                let route: Route = other.parse()?;
                stats::average_e(a.k, route)?;
                let (mean, best) = time_it(a.repeat, || stats::average_e(a.k, route));
                ("average_route", mean, best)
            }
        };
        let (mean_ms, best_ms) = (mean.as_secs_f64() * 1e3, best.as_secs_f64() * 1e3);
        r.row([
            kind.to_string(),
            name.clone(),
            a.k.to_string(),
            a.repeat.to_string(),
            format!("{mean_ms:.3}"),
            format!("{best_ms:.3}"),
        ]);
        entries.push(json!({
            "kind": kind, "name": name, "k": a.k, "repeat": a.repeat,
            "mean_ms": mean_ms, "best_ms": best_ms,
        }));
    }
    r.body = json!({"nmax": a.nmax, "timings": entries});
    Ok((r, true))
}

pub fn valueset(k: u64) -> Outcome {
    let vs = stats::value_set(k)?;
    let witnesses = stats::value_set_with_witnesses(k, false)?;
    let mut r = Report::new("cyclo.valueset/v1", Value::Null, vec!["v", "witness_n", "odd_n"]);
    for (v, w) in &witnesses {
        r.row([v.to_string(), w.to_string(), vs.parity_odd.contains(v).to_string()]);
    }
    let mut body = to_json(&vs);
    body["witnesses"] = witnesses
        .iter()
        .map(|(v, w)| json!({"v": v, "n": w}))
        .collect::<Vec<_>>()
        .into();
    r.body = body;
    Ok((r, true))
}

pub fn density(k: u64) -> Outcome {
    let d = stats::density(k)?;
    let mut r = Report::new("cyclo.density/v1", Value::Null, vec!["k", "v", "scaled_density"]);
    for (v, x) in &d.scaled {
        r.row([k.to_string(), v.to_string(), x.to_string()]);
    }
    r.body = json!({
        "k": k,
        "scaled": d.scaled.iter().map(|(v, x)| json!({"v": v, "value": x})).collect::<Vec<_>>(),
        "zero_density": {
            "symbolic": format!("1 - (6/pi^2)*({})", d.zero_q),
            "q": d.zero_q,
            "float": format!("{:.15}", d.zero_density_f64()),
        },
    });
    Ok((r, true))
}

pub fn average(a: &AverageArgs) -> Outcome {
    if let Some(route) = &a.route {
        let route: Route = route.parse()?;
        let e = stats::average_e(a.k, route)?;
        let mut r = Report::new(
            "cyclo.average/v1",
            json!({"k": a.k, "route": route, "e": e}),
            vec!["k", "route", "e"],
        );
        r.row([a.k.to_string(), route.to_string(), e.to_string()]);
        return Ok((r, true));
    }
    let rep = stats::twisted_averages(a.k)?;
    let mut r = Report::new("cyclo.average/v1", to_json(&rep), vec!["k", "e", "f", "g"]);
    r.row([a.k.to_string(), rep.e.to_string(), rep.f.to_string(), rep.g.to_string()]);
    Ok((r, true))
}

pub fn empirical(a: &EmpiricalArgs) -> Outcome {
    let s = stats::empirical_stats(a.k, a.x, a.v)?;
    let mut r = Report::new("cyclo.empirical/v1", to_json(&s), vec!["k", "x", "avg", "v", "freq"]);
    r.row([
        a.k.to_string(),
        a.x.to_string(),
        format!("{:.12}", s.avg.to_f64()),
        a.v.map(|v| v.to_string()).unwrap_or_default(),
        s.freq.as_ref().map(|f| format!("{:.12}", f.to_f64())).unwrap_or_default(),
    ]);
    Ok((r, true))
}
