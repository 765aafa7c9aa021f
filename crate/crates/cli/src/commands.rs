use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::time::Instant;

use ekr_core::format::{parse_family, write_family, write_matrix};
use ekr_core::{
    brute_alpha, certify_extremes, design_consistency_check, design_registry, verify_equality,
    Basis, Construction, EqualityMode, PseudoadjacencyDescriptor, PsdCertificate, SchemeParams,
    DEFAULT_BRUTE_CAP, DEFAULT_MATERIALIZE_CAP, DEFAULT_SPECTRAL_CAP,
};
use serde_json::json;

use crate::report::{CmdError, Outcome, Rendered, RunReport};
use crate::{BasisName, Cli, Command, Format, MatrixName, ModeName, Triple};

type CmdResult = Result<Rendered, CmdError>;

pub fn run(cli: &Cli, command_echo: &str) -> u8 {
    let start = Instant::now();
    let result = dispatch(cli);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let (outcome, json_result, text, error) = match result {
        Ok(Some(r)) => (r.outcome, r.json, r.text, None),
        // Output already written (matrix to stdout).
        Ok(None) => return Outcome::Verified.code(),
        Err(e) => (e.outcome, serde_json::Value::Null, String::new(), Some(e.message)),
    };
    if let Some(msg) = &error {
        eprintln!("error: {msg}");
    }
    let body = match cli.format {
        Format::Json => {
            let report = RunReport {
                command: command_echo.to_string(),
                version: env!("CARGO_PKG_VERSION"),
                status: outcome,
                exit_code: outcome.code(),
                error,
                result: json_result,
                elapsed_ms,
            };
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
        }
        Format::Text => text,
    };
    // `matrix` uses --out for the matrix itself; its report goes to stdout.
    let report_path = match cli.command {
        Command::Matrix { .. } => None,
        _ => cli.out.as_ref(),
    };
    match report_path {
        Some(path) => {
            if let Err(e) = fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return Outcome::Io.code();
            }
        }
        None => {
            if std::io::stdout().write_all(body.as_bytes()).is_err() {
                return Outcome::Io.code();
            }
        }
    }
    outcome.code()
}

fn dispatch(cli: &Cli) -> Result<Option<Rendered>, CmdError> {
    match &cli.command {
        Command::VerifyEquality { n_max, k_max, mode } => {
            verify(cli, *n_max, *k_max, *mode).map(Some)
        }
        Command::Coeffs { triple, matrix, basis } => coeffs(*triple, *matrix, *basis).map(Some),
        Command::Spectrum { triple, matrix } => spectrum(cli, *triple, *matrix).map(Some),
        Command::Matrix { triple, matrix } => matrix_cmd(cli, *triple, *matrix),
        Command::Alpha { triple } => alpha(cli, *triple).map(Some),
        Command::InnerDist { family } => inner_dist(family).map(Some),
        Command::Designs { name, check } => designs(name.as_deref(), *check).map(Some),
    }
}

fn params(t: Triple) -> Result<SchemeParams, CmdError> {
    Ok(SchemeParams::new(t.n, t.k, t.t)?)
}

fn construction(m: MatrixName) -> Construction {
    match m {
        MatrixName::Schrijver => Construction::Schrijver,
        MatrixName::Wilson => Construction::Wilson,
    }
}

fn cap(cli: &Cli, default: u64) -> u64 {
    cli.cap_n.unwrap_or(default)
}

fn verify(cli: &Cli, n_max: Option<u32>, k_max: Option<u32>, mode: ModeName) -> CmdResult {
    let (mode, dn, dk) = match mode {
        ModeName::Coefficients => (EqualityMode::Coefficients, 24, 8),
        ModeName::Materialized => (EqualityMode::Materialized, 12, 5),
    };
    let (n_max, k_max) = (n_max.unwrap_or(dn), k_max.unwrap_or(dk));
    let grid = SchemeParams::grid(n_max, k_max);
    if grid.is_empty() {
        return Err(CmdError::invalid(format!(
            "no valid (n,k,t) with n <= {n_max}, k <= {k_max} (need 0 < t < k, n >= 2k)"
        )));
    }
    let cap = cap(cli, DEFAULT_MATERIALIZE_CAP);
    let mut reports = Vec::with_capacity(grid.len());
    for params in grid {
        reports.push(verify_equality(params, mode, cap)?);
    }
    let equal = reports.iter().filter(|r| r.equal).count();
    let all = equal == reports.len();
    let mut text = String::new();
    for r in &reports {
        if r.equal {
            let _ = writeln!(text, "{} equal", r.params);
        } else {
            let _ = writeln!(text, "{} MISMATCH ({} differences): {:?}", r.params, r.mismatch_count, r.mismatches);
        }
    }
    let _ = writeln!(text, "{equal}/{} triples equal ({mode} mode)", reports.len());
    Ok(Rendered {
        outcome: if all { Outcome::Verified } else { Outcome::Failed },
        json: json!({
            "mode": mode,
            "n_max": n_max,
            "k_max": k_max,
            "triples": reports.len(),
            "equal": equal,
            "all_equal": all,
            "reports": reports,
        }),
        text,
    })
}

fn coeffs(triple: Triple, matrix: MatrixName, basis: BasisName) -> CmdResult {
    let params = params(triple)?;
    let d = PseudoadjacencyDescriptor::build(params, construction(matrix))?;
    let basis = match basis {
        BasisName::A => Basis::A,
        BasisName::D => Basis::D,
    };
    let v = d.in_basis(basis);
    let mut text = String::new();
    let mut entries = Vec::new();
    for (i, c) in v.nonzero().rev() {
        let _ = writeln!(text, "{basis}_{i}: {c}");
        entries.push(json!({ "index": i, "value": c }));
    }
    Ok(Rendered {
        outcome: Outcome::Verified,
        json: json!({
            "params": params,
            "matrix": d.label,
            "basis": basis,
            "coefficients": entries,
        }),
        text,
    })
}

fn opt(r: &Option<ekr_core::Rational>) -> String {
    r.as_ref().map_or_else(|| "uncertified".to_string(), |x| x.to_string())
}

fn psd_summary(c: &PsdCertificate) -> String {
    match c {
        PsdCertificate::Psd { rank, .. } => format!("psd (rank {rank})"),
        PsdCertificate::NotPsd { obstruction, value, .. } => {
            format!("not psd ({obstruction:?}, witness form {value})")
        }
    }
}

fn spectrum(cli: &Cli, triple: Triple, matrix: MatrixName) -> CmdResult {
    let params = params(triple)?;
    let d = PseudoadjacencyDescriptor::build(params, construction(matrix))?;
    let cert = certify_extremes(&d, cap(cli, DEFAULT_SPECTRAL_CAP))?;
    let mut text = String::new();
    let _ = writeln!(text, "params: {params} ({})", d.label);
    let _ = writeln!(text, "vertices: {}", cert.dimension);
    let _ = writeln!(
        text,
        "ekr threshold: {} ({})",
        params.ekr_threshold(),
        if params.in_ekr_range() { "in range" } else { "below" }
    );
    let _ = writeln!(text, "row sum: {}", cert.row_sum_eigenvalue);
    let _ = writeln!(text, "M + I: {}", psd_summary(&cert.shifted_psd));
    let _ = writeln!(text, "rank(M + I): {}", cert.shifted_rank);
    let _ = writeln!(text, "row sum * I - M: {}", psd_summary(&cert.upper_psd));
    let _ = writeln!(text, "lambda_max: {}", opt(&cert.lambda_max_certified));
    let _ = writeln!(text, "lambda_min: {}", opt(&cert.lambda_min_certified));
    let _ = writeln!(
        text,
        "hoffman bound: {}",
        cert.hoffman_bound.as_ref().map_or("absent".to_string(), |h| h.to_string())
    );
    Ok(Rendered {
        outcome: if cert.both_certified() { Outcome::Verified } else { Outcome::Failed },
        json: serde_json::to_value(&cert).expect("certificate serializes"),
        text,
    })
}

fn matrix_cmd(cli: &Cli, triple: Triple, matrix: MatrixName) -> Result<Option<Rendered>, CmdError> {
    let params = params(triple)?;
    let d = PseudoadjacencyDescriptor::build(params, construction(matrix))?;
    let m = d.materialize(cap(cli, DEFAULT_MATERIALIZE_CAP))?;
    let body = write_matrix(&m);
    let Some(path) = &cli.out else {
        std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| CmdError::io(format!("stdout: {e}")))?;
        return Ok(None);
    };
    fs::write(path, &body).map_err(|e| CmdError::io(format!("cannot write {}: {e}", path.display())))?;
    let nnz = m.upper_nonzeros().count();
    Ok(Some(Rendered {
        outcome: Outcome::Verified,
        json: json!({
            "params": params,
            "matrix": d.label,
            "dimension": m.dim(),
            "upper_nonzeros": nnz,
            "path": path.display().to_string(),
        }),
        text: format!("wrote {0}x{0} {1} matrix ({nnz} upper-triangle nonzeros) to {2}\n", m.dim(), d.label, path.display()),
    }))
}

fn alpha(cli: &Cli, triple: Triple) -> CmdResult {
    let params = params(triple)?;
    let r = brute_alpha(params, cap(cli, DEFAULT_BRUTE_CAP))?;
    let bound = params.ekr_bound();
    let blocks: Vec<Vec<u32>> = r.witness.blocks().iter().map(|b| b.points().collect()).collect();
    let mut text = format!("alpha{params} = {}\nC(n-t,k-t) = {bound}\nwitness:\n", r.alpha);
    text.push_str(write_family(&r.witness).split_once('\n').map_or("", |(_, rest)| rest));
    Ok(Rendered {
        outcome: Outcome::Verified,
        json: json!({
            "params": params,
            "alpha": r.alpha,
            "ekr_bound": bound.to_string(),
            "witness": blocks,
        }),
        text,
    })
}

fn inner_dist(path: &std::path::Path) -> CmdResult {
    let text = fs::read_to_string(path)
        .map_err(|e| CmdError::io(format!("cannot read {}: {e}", path.display())))?;
    let family = parse_family(&text)?;
    let scheme = ekr_core::JohnsonScheme::new(family.n(), family.k())?;
    let e = scheme.inner_distribution(&family)?;
    let line = e.e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    Ok(Rendered {
        outcome: Outcome::Verified,
        json: json!({
            "n": family.n(),
            "k": family.k(),
            "size": family.len(),
            "inner_distribution": e.e,
        }),
        text: line + "\n",
    })
}

fn designs(name: Option<&str>, check: bool) -> CmdResult {
    let names: Vec<&str> = match name {
        Some(n) => vec![n],
        None => ekr_core::families::DESIGN_NAMES.to_vec(),
    };
    let mut text = String::new();
    let mut items = Vec::new();
    let mut ok = true;
    for n in names {
        let rec = design_registry(n)?;
        let _ = writeln!(
            text,
            "{}: {}-({},{},1), {} blocks",
            rec.name,
            rec.t,
            rec.n,
            rec.k,
            rec.family.len()
        );
        let blocks: Vec<Vec<u32>> = rec.family.blocks().iter().map(|b| b.points().collect()).collect();
        let mut item = json!({
            "name": rec.name,
            "t": rec.t,
            "n": rec.n,
            "k": rec.k,
            "blocks": blocks,
        });
        if check {
            let r = design_consistency_check(&rec)?;
            let e: Vec<String> = r.inner_distribution.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(text, "  inner distribution: {}", e.join(", "));
            for row in &r.rows {
                let _ = writeln!(
                    text,
                    "  a_{0} = {1}, e_{0} = {2}: {3}",
                    row.index,
                    row.a,
                    row.e,
                    if row.matches { "match" } else { "MISMATCH" }
                );
            }
            ok &= r.all_match;
            item["consistency"] = serde_json::to_value(&r).expect("report serializes");
        } else {
            for b in &blocks {
                let pts: Vec<String> = b.iter().map(|p| p.to_string()).collect();
                let _ = writeln!(text, "  {}", pts.join(" "));
            }
        }
        items.push(item);
    }
    Ok(Rendered {
        outcome: if ok { Outcome::Verified } else { Outcome::Failed },
        json: json!({ "designs": items }),
        text,
    })
}
