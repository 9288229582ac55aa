//! Command-line front end for the cominuscule quantum K-theory calculator.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports failures,
//! 2 on usage or parse errors.

use qkc_core::curves;
use qkc_core::error::Error;
use qkc_core::grassq;
use qkc_core::io;
use qkc_core::oracle;
use qkc_core::poset::{build_poset, CominusculePoset, SpaceKind};
use qkc_core::qk;
use qkc_core::shapes::{self, Shape};
use qkc_core::verify::{self, ChainSample, CheckReport};
use serde_json::json;
use std::process::ExitCode;

const USAGE: &str = "\
usage: qkc <command> [args] [options]

commands:
  poset <space>                     poset diagram and box data
  shapes <space>                    list all shapes (order ideals)
  ideal <space> <shape>             ideal sheaf I^mu in the Schubert basis
  qideal <space> <shape>            quantized ideal sheaf I_q^mu
  alpha <space> <shape>             the class alpha^mu
  chev <space> <shape> [--quantum]  Chevalley product O^mu (1 - O^{s_gamma})
  psi <space> <shape>               first curve neighborhood mu(-1)
  dist <space> <u> <v>              curve-neighborhood distance d(u,v)
  pair <space> <exprfile> <shape>   quantum K-metric pairing ((expr, O_shape))
  detq <k> <n> <shape> [--nonequivariant]
                                    det Q * O^mu in QK_T(Gr(k,n))
  oracle qh <k> <n> <lam> <mu>      quantum cohomology product (rim hooks)
  oracle check-dist <k> <n>         distance vs. the rim-hook oracle
  verify <space> <suite> [--jobs N] suite: duality | classical | alpha |
                                    lemma-weight

options:
  --format text|json|diagram        output format (default text)
  --jobs N                          worker threads for verify suites
  --quantum, --nonequivariant       command-specific toggles

spaces: Gr(k,n), LG(n), OG(n), Q(n), E6, E7
shapes: [] | [3,2,1] | {boxes:[[r,c],...]}
environment: QKC_MAX_DIM caps the space dimension (default 30)";

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Diagram,
}

struct Options {
    format: Format,
    jobs: usize,
    quantum: bool,
    nonequivariant: bool,
}

fn parse_options(args: &[String]) -> Result<(Vec<String>, Options), Error> {
    let mut positional = Vec::new();
    let mut opts = Options {
        format: Format::Text,
        jobs: 1,
        quantum: false,
        nonequivariant: false,
    };
    let mut it = args.iter().peekable();
    while let Some(a) = it.next() {
        let take_value = |it: &mut std::iter::Peekable<std::slice::Iter<String>>,
                          inline: Option<&str>,
                          name: &str|
         -> Result<String, Error> {
            if let Some(v) = inline {
                return Ok(v.to_string());
            }
            it.next()
                .cloned()
                .ok_or_else(|| Error::Parse(format!("{name} needs a value")))
        };
        if let Some(rest) = a.strip_prefix("--format") {
            let v = take_value(&mut it, rest.strip_prefix('='), "--format")?;
            opts.format = match v.as_str() {
                "text" => Format::Text,
                "json" => Format::Json,
                "diagram" => Format::Diagram,
                other => return Err(Error::Parse(format!("unknown format `{other}`"))),
            };
        } else if let Some(rest) = a.strip_prefix("--jobs") {
            let v = take_value(&mut it, rest.strip_prefix('='), "--jobs")?;
            opts.jobs = v
                .parse::<usize>()
                .ok()
                .filter(|&j| j >= 1)
                .ok_or_else(|| Error::Parse(format!("bad --jobs value `{v}`")))?;
        } else if a == "--quantum" {
            opts.quantum = true;
        } else if a == "--nonequivariant" {
            opts.nonequivariant = true;
        } else if a.starts_with("--") {
            return Err(Error::Parse(format!("unknown option `{a}`")));
        } else {
            positional.push(a.clone());
        }
    }
    Ok((positional, opts))
}

fn max_dim() -> usize {
    std::env::var("QKC_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(30)
}

fn load_poset(space: &str) -> Result<CominusculePoset, Error> {
    let kind = SpaceKind::parse(space)?;
    let bound = max_dim();
    if kind.dimension() > bound {
        return Err(Error::Config(format!(
            "dim {} of {kind} exceeds the limit {bound} (set QKC_MAX_DIM to raise it)",
            kind.dimension()
        )));
    }
    build_poset(kind)
}

fn parse_usize(s: &str, what: &str) -> Result<usize, Error> {
    s.parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad {what} `{s}`")))
}

fn parse_partition(s: &str) -> Result<Vec<usize>, Error> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("partition literal `{s}` must be [..]")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| parse_usize(p, "partition part"))
        .collect()
}

fn print_expr(
    poset: &CominusculePoset,
    e: &qk::SchubertExpr,
    opts: &Options,
    shape: Option<Shape>,
) {
    match opts.format {
        Format::Json => println!("{}", io::expr_to_json(poset, e)),
        Format::Text => println!("{}", io::expr_to_text(poset, e)),
        Format::Diagram => {
            if let Some(s) = shape {
                print!("{}", poset.render_shape(s));
            }
            println!("{}", io::expr_to_text(poset, e));
        }
    }
}

fn report_output(report: &CheckReport, noun: &str, opts: &Options) -> ExitCode {
    match opts.format {
        Format::Json => {
            for item in &report.items {
                println!(
                    "{}",
                    json!({
                        "check": report.label,
                        "subject": item.subject,
                        "ok": item.ok,
                        "detail": item.detail,
                    })
                );
            }
            println!(
                "{}",
                json!({
                    "check": report.label,
                    "checked": report.checked(),
                    "failures": report.failures().len(),
                })
            );
        }
        _ => {
            println!("{}: {}", report.label, report.summary(noun));
            for item in report.failures() {
                println!("  FAIL {} {}", item.subject, item.detail);
            }
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(args: &[String]) -> Result<ExitCode, Error> {
    let (pos, opts) = parse_options(args)?;
    if pos.is_empty() {
        return Err(Error::Parse("missing command".to_string()));
    }
    let cmd = pos[0].as_str();
    let rest = &pos[1..];
    match cmd {
        "poset" => {
            let [space] = rest else {
                return Err(Error::Parse("poset <space>".into()));
            };
            let p = load_poset(space)?;
            match opts.format {
                Format::Json => {
                    let boxes: Vec<_> = p
                        .boxes()
                        .iter()
                        .map(|b| {
                            json!({
                                "row": b.row,
                                "col": b.col,
                                "short": b.short,
                                "delta": b.delta + 1,
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({
                            "space": p.kind().to_string(),
                            "dim": p.dim(),
                            "minuscule": p.space().is_minuscule(),
                            "boxes": boxes,
                            "z1": io::shape_to_json(&p, p.z1()),
                        })
                    );
                }
                Format::Text => {
                    println!(
                        "{}: dim {}, {} shapes, z1 = {}",
                        p.kind(),
                        p.dim(),
                        shapes::enumerate_shapes(&p).len(),
                        shapes::render_shape(&p, p.z1()),
                    );
                    print!("{}", p.render());
                }
                Format::Diagram => print!("{}", p.render()),
            }
            Ok(ExitCode::SUCCESS)
        }
        "shapes" => {
            let [space] = rest else {
                return Err(Error::Parse("shapes <space>".into()));
            };
            let p = load_poset(space)?;
            let all = shapes::enumerate_shapes(&p);
            match opts.format {
                Format::Json => {
                    let list: Vec<_> = all.iter().map(|&s| io::shape_to_json(&p, s)).collect();
                    println!("{}", json!(list));
                }
                _ => {
                    for s in all {
                        println!("{}", shapes::render_shape(&p, s));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        "ideal" | "qideal" | "alpha" => {
            let [space, shape] = rest else {
                return Err(Error::Parse(format!("{cmd} <space> <shape>")));
            };
            let p = load_poset(space)?;
            let mu = shapes::parse_shape(&p, shape)?;
            let e = match cmd {
                "ideal" => qk::ideal_sheaf(&p, mu),
                "qideal" => qk::quantized_ideal_sheaf(&p, mu),
                _ => qk::alpha(&p, mu),
            };
            print_expr(&p, &e, &opts, Some(mu));
            Ok(ExitCode::SUCCESS)
        }
        "chev" => {
            let [space, shape] = rest else {
                return Err(Error::Parse("chev <space> <shape> [--quantum]".into()));
            };
            let p = load_poset(space)?;
            let mu = shapes::parse_shape(&p, shape)?;
            if opts.quantum {
                let e = qk::chevalley_quantum(&p, mu);
                print_expr(&p, &e, &opts, Some(mu));
            } else {
                let (ideal_form, opposite) = qk::chevalley_classical(&p, mu);
                match opts.format {
                    Format::Json => println!(
                        "{}",
                        json!({
                            "ideal_basis": io::expr_to_json(&p, &ideal_form),
                            "opposite_basis": io::expr_to_json(&p, &opposite),
                        })
                    ),
                    _ => {
                        println!("{}", io::expr_to_text(&p, &ideal_form));
                        println!("{}", io::expr_to_text(&p, &opposite));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        "psi" => {
            let [space, shape] = rest else {
                return Err(Error::Parse("psi <space> <shape>".into()));
            };
            let p = load_poset(space)?;
            let u = shapes::parse_shape(&p, shape)?;
            let img = curves::psi_shape(&p, u);
            match opts.format {
                Format::Json => println!("{}", io::shape_to_json(&p, img)),
                Format::Text => println!("{}", shapes::render_shape(&p, img)),
                Format::Diagram => {
                    print!("{}", p.render_shape(u));
                    println!("-> {}", shapes::render_shape(&p, img));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        "dist" => {
            let [space, u, v] = rest else {
                return Err(Error::Parse("dist <space> <u> <v>".into()));
            };
            let p = load_poset(space)?;
            let u = shapes::parse_shape(&p, u)?;
            let v = shapes::parse_shape(&p, v)?;
            let d = curves::distance(&p, u, v);
            match opts.format {
                Format::Json => println!("{}", json!({ "distance": d })),
                _ => println!("{d}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        "pair" => {
            let [space, exprfile, shape] = rest else {
                return Err(Error::Parse("pair <space> <exprfile> <shape>".into()));
            };
            let p = load_poset(space)?;
            let lam = shapes::parse_shape(&p, shape)?;
            let text = std::fs::read_to_string(exprfile)
                .map_err(|e| Error::Parse(format!("cannot read {exprfile}: {e}")))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("bad JSON in {exprfile}: {e}")))?;
            let expr = io::expr_from_json(&p, &value)?;
            let r = qk::qk_pairing(&p, &expr, lam)?;
            match opts.format {
                Format::Json => {
                    let r = r.normalized();
                    let num: Vec<_> = r
                        .num
                        .coeffs()
                        .map(|(d, c)| json!({ "q": d, "coeff": io::weight_poly_to_json(c) }))
                        .collect();
                    println!("{}", json!({ "num": num, "denom_pow": r.denom_pow }));
                }
                _ => println!("{}", io::qrational_to_text(&r)),
            }
            Ok(ExitCode::SUCCESS)
        }
        "detq" => {
            let [k, n, shape] = rest else {
                return Err(Error::Parse(
                    "detq <k> <n> <shape> [--nonequivariant]".into(),
                ));
            };
            let k = parse_usize(k, "k")?;
            let n = parse_usize(n, "n")?;
            let p = load_poset(&format!("Gr({k},{n})"))?;
            let mu = parse_partition(shape)?;
            let e = grassq::detq_product(&p, &mu)?;
            match opts.format {
                Format::Json => {
                    let e = if opts.nonequivariant {
                        e.restrict_nonequivariant(n)
                    } else {
                        e
                    };
                    println!("{}", io::expr_to_json(&p, &e));
                }
                _ => println!("{}", grassq::detq_to_text(&p, &e, opts.nonequivariant)),
            }
            Ok(ExitCode::SUCCESS)
        }
        "oracle" => match rest {
            [sub, k, n, a, b] if sub == "qh" => {
                let k = parse_usize(k, "k")?;
                let n = parse_usize(n, "n")?;
                let lam = parse_partition(a)?;
                let mu = parse_partition(b)?;
                if !oracle::fits_in_box(&lam, k, n) || !oracle::fits_in_box(&mu, k, n) {
                    return Err(Error::Domain(
                        "partitions must fit in the k x (n-k) box".into(),
                    ));
                }
                let product = oracle::quantum_product(k, n, &lam, &mu);
                match opts.format {
                    Format::Json => {
                        let terms: Vec<_> = product
                            .iter()
                            .map(|((p, d), c)| json!({ "shape": p, "q": d, "coeff": c }))
                            .collect();
                        println!("{}", json!(terms));
                    }
                    _ => {
                        for ((p, d), c) in &product {
                            let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                            let qpart = match d {
                                0 => String::new(),
                                1 => "q*".to_string(),
                                _ => format!("q^{d}*"),
                            };
                            println!("{c} * {qpart}X[{}]", parts.join(","));
                        }
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
            [sub, k, n] if sub == "check-dist" => {
                let k = parse_usize(k, "k")?;
                let n = parse_usize(n, "n")?;
                let p = load_poset(&format!("Gr({k},{n})"))?;
                let report = verify::verify_distance_oracle(&p, opts.jobs);
                Ok(report_output(&report, "pairs", &opts))
            }
            _ => Err(Error::Parse(
                "oracle qh <k> <n> <lam> <mu> | oracle check-dist <k> <n>".into(),
            )),
        },
        "verify" => {
            let [space, suite] = rest else {
                return Err(Error::Parse(
                    "verify <space> duality|classical|alpha|lemma-weight".into(),
                ));
            };
            let p = load_poset(space)?;
            let (report, noun) = match suite.as_str() {
                "duality" => (verify::verify_duality(&p, opts.jobs), "pairs"),
                "classical" => (verify::verify_classical(&p, opts.jobs), "pairs"),
                "alpha" => (verify::verify_alpha(&p, opts.jobs), "classes"),
                "lemma-weight" => (
                    verify::verify_lemma_weight(&p, ChainSample::Exhaustive),
                    "chains",
                ),
                other => return Err(Error::Parse(format!("unknown verify suite `{other}`"))),
            };
            Ok(report_output(&report, noun, &opts))
        }
        other => Err(Error::Parse(format!("unknown command `{other}`"))),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--help" || a == "-h") || args.is_empty() {
        println!("{USAGE}");
        return ExitCode::SUCCESS;
    }
    match run(&args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!();
            eprintln!("{USAGE}");
            ExitCode::from(2)
        }
    }
}
