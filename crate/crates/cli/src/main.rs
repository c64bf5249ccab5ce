//! Batch driver: apply a named algorithm to a `.net` file (or every `.net`
//! file in a directory) and print a small report block per input.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or parse error,
//! 3 algorithm/graph mismatch.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use xgraph::bmatrix::b_matrix;
use xgraph::coloring::graph_coloring;
use xgraph::dfvs::minimum_directed_fvs;
use xgraph::gen;
use xgraph::io::{read_net, write_net};
use xgraph::mis::{self, MoonMoserMode};
use xgraph::mvc::{minimum_vertex_cover, CoverDecider};
use xgraph::separators::{get_ab_separators, get_all_minimal_separators};
use xgraph::{Error, Graph, VertexId, VertexSet};

const ACRONYMS: [&str; 11] = [
    "CN", "MISBF", "MISMM", "MISDegMax", "MISFGK", "MVCBF", "MVCBG", "MVCDBS", "MVCN", "DFVS",
    "SEP",
];

fn main() -> ExitCode {
    let args: Vec<String> = env::args().skip(1).collect();
    let code = match args.first().map(String::as_str) {
        Some("gen") => cmd_gen(&args[1..]),
        Some("bmatrix") => cmd_bmatrix(&args[1..]),
        _ => cmd_run(&args),
    };
    ExitCode::from(code)
}

fn usage(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    eprintln!(
        "usage: xgraph <graphFilePath|graphDirectoryPath> <ALGORITHM> [--mode iterative] [--pair A B]"
    );
    eprintln!("       xgraph gen <name> <params...> [--seed S] [-o file.net]");
    eprintln!("       xgraph bmatrix <file.net> [-o file.csv]");
    1
}

fn cmd_run(args: &[String]) -> u8 {
    let mut positional: Vec<&String> = Vec::new();
    let mut mode = MoonMoserMode::Recursive;
    let mut pair: Option<(String, String)> = None;
    let mut i = 0;
    while i < args.len() {
        match args[i].as_str() {
            "--mode" => {
                i += 1;
                match args.get(i).map(String::as_str) {
                    Some("iterative") => mode = MoonMoserMode::Iterative,
                    Some("recursive") => mode = MoonMoserMode::Recursive,
                    _ => return usage("--mode expects `iterative` or `recursive`"),
                }
            }
            "--pair" => {
                if i + 2 >= args.len() {
                    return usage("--pair expects two vertex labels");
                }
                pair = Some((args[i + 1].clone(), args[i + 2].clone()));
                i += 2;
            }
            s if s.starts_with("--") => return usage(&format!("unknown flag `{s}`")),
            _ => positional.push(&args[i]),
        }
        i += 1;
    }
    if positional.len() != 2 {
        return usage("expected <graphFilePath|graphDirectoryPath> <ALGORITHM>");
    }
    let path = Path::new(positional[0]);
    let algo = positional[1].as_str();
    if !ACRONYMS.contains(&algo) {
        return usage(&format!(
            "unknown algorithm `{algo}`; valid acronyms: {}",
            ACRONYMS.join(", ")
        ));
    }
    if pair.is_some() && algo != "SEP" {
        return usage("--pair only applies to SEP");
    }

    let (files, dir_mode) = match collect_inputs(path) {
        Ok(v) => v,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };

    let mut status = 0u8;
    let mut first = true;
    for file in &files {
        match run_file(file, algo, mode, &pair, dir_mode) {
            Ok(block) => {
                if !first {
                    println!();
                }
                print!("{block}");
                first = false;
            }
            Err((code, msg)) => {
                eprintln!("{}: error: {msg}", file.display());
                if status == 0 {
                    status = code;
                }
            }
        }
    }
    status
}

/// Single file, or every `.net` file of a directory in lexicographic
/// name order. The boolean reports directory mode.
fn collect_inputs(path: &Path) -> Result<(Vec<PathBuf>, bool), String> {
    if path.is_dir() {
        let entries =
            fs::read_dir(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let mut files: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "net"))
            .collect();
        if files.is_empty() {
            return Err(format!("no .net files in {}", path.display()));
        }
        files.sort_by_key(|p| p.file_name().map(|n| n.to_os_string()));
        Ok((files, true))
    } else if path.is_file() {
        Ok((vec![path.to_path_buf()], false))
    } else {
        Err(format!("no such file or directory: {}", path.display()))
    }
}

fn run_file(
    path: &Path,
    algo: &str,
    mode: MoonMoserMode,
    pair: &Option<(String, String)>,
    dir_mode: bool,
) -> Result<String, (u8, String)> {
    let text = fs::read_to_string(path).map_err(|e| (2, e.to_string()))?;
    let g = read_net(&text).map_err(|e| (2, e.to_string()))?;

    let start = Instant::now();
    let (size, members) = apply(&g, algo, mode, pair).map_err(|e| (exit_code(&e), e.to_string()))?;
    let ms = start.elapsed().as_secs_f64() * 1000.0;

    let mut block = String::new();
    if dir_mode {
        let name = path.file_name().unwrap().to_string_lossy();
        block.push_str(&format!("{name}\n"));
    }
    block.push_str(&format!("V:{} E:{}\n", g.vertex_count(), g.edge_count()));
    block.push_str(&format!("{ms:.1} ms\n"));
    block.push_str(&format!("Size: {size}\n"));
    block.push_str(&format!("{members}\n"));
    Ok(block)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::InvalidParameter(_) => 1,
        _ => 3,
    }
}

fn apply(
    g: &Graph,
    algo: &str,
    mode: MoonMoserMode,
    pair: &Option<(String, String)>,
) -> Result<(usize, String), Error> {
    let cover = |d| minimum_vertex_cover(g, d).map(|s| (s.len(), render_set(g, &s)));
    let set = |s: VertexSet| (s.len(), render_set(g, &s));
    match algo {
        "CN" => {
            let p = graph_coloring(g)?;
            Ok((p.classes.len(), render_sets(g, &p.classes)))
        }
        "MISBF" => mis::mis_brute_force(g).map(set),
        "MISMM" => mis::mis_moon_moser(g, mode).map(set),
        "MISDegMax" => mis::mis_max_degree_branching(g).map(set),
        "MISFGK" => mis::mis_fgk(g).map(set),
        "MVCBF" => cover(CoverDecider::BruteForce),
        "MVCBG" => cover(CoverDecider::BussGoldsmith),
        "MVCDBS" => cover(CoverDecider::Dbs),
        "MVCN" => cover(CoverDecider::Niedermeier),
        "DFVS" => minimum_directed_fvs(g).map(set),
        "SEP" => {
            let seps = match pair {
                Some((a, b)) => get_ab_separators(g, find_label(g, a)?, find_label(g, b)?)?,
                None => get_all_minimal_separators(g)?,
            };
            Ok((seps.len(), render_sets(g, &seps)))
        }
        _ => unreachable!("acronym validated by caller"),
    }
}

fn find_label(g: &Graph, label: &str) -> Result<VertexId, Error> {
    g.vertices()
        .find(|&v| g.label(v) == Ok(label))
        .ok_or_else(|| Error::InvalidParameter(format!("no vertex labeled `{label}`")))
}

/// `[a, c]` — members by label in ascending vertex-id order.
fn render_set(g: &Graph, s: &VertexSet) -> String {
    let labels: Vec<&str> = s.iter().map(|v| g.label(v).unwrap_or("?")).collect();
    format!("[{}]", labels.join(", "))
}

fn render_sets(g: &Graph, sets: &[VertexSet]) -> String {
    let inner: Vec<String> = sets.iter().map(|s| render_set(g, s)).collect();
    format!("[{}]", inner.join(", "))
}

fn cmd_gen(args: &[String]) -> u8 {
    let mut positional: Vec<&String> = Vec::new();
    let mut seed = 0u64;
    let mut out: Option<PathBuf> = None;
    let mut i = 0;
    while i < args.len() {
        match args[i].as_str() {
            "--seed" => {
                i += 1;
                seed = match args.get(i).and_then(|s| s.parse().ok()) {
                    Some(s) => s,
                    None => return usage("--seed expects an unsigned integer"),
                };
            }
            "-o" => {
                i += 1;
                match args.get(i) {
                    Some(p) => out = Some(PathBuf::from(p)),
                    None => return usage("-o expects a file path"),
                }
            }
            s if s.starts_with('-') => return usage(&format!("unknown flag `{s}`")),
            _ => positional.push(&args[i]),
        }
        i += 1;
    }
    let Some((name, params)) = positional.split_first() else {
        return usage("gen expects a generator name");
    };
    let g = match build_graph(name, params, seed) {
        Ok(g) => g,
        Err(msg) => return usage(&msg),
    };
    let text = write_net(&g);
    write_output(&text, out.as_deref())
}

fn build_graph(name: &str, params: &[&String], seed: u64) -> Result<Graph, String> {
    fn num<T: std::str::FromStr>(params: &[&String], i: usize, what: &str) -> Result<T, String> {
        params
            .get(i)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| format!("expected {what} as parameter {}", i + 1))
    }
    let arity = |n: usize, sig: &str| -> Result<(), String> {
        if params.len() == n {
            Ok(())
        } else {
            Err(format!("{name} expects parameters: {sig}"))
        }
    };
    let g = match name {
        "er" => {
            arity(2, "<n> <p>")?;
            gen::erdos_renyi(num(params, 0, "n")?, num(params, 1, "p")?, seed)
        }
        "ba" => {
            arity(3, "<n0> <m> <steps>")?;
            gen::barabasi_albert(
                num(params, 0, "n0")?,
                num(params, 1, "m")?,
                num(params, 2, "steps")?,
                seed,
            )
        }
        "ws" => {
            arity(3, "<n> <k> <beta>")?;
            gen::watts_strogatz(
                num(params, 0, "n")?,
                num(params, 1, "k")?,
                num(params, 2, "beta")?,
                seed,
            )
        }
        "kleinberg" => {
            arity(3, "<rows> <cols> <r>")?;
            gen::kleinberg(
                num(params, 0, "rows")?,
                num(params, 1, "cols")?,
                num(params, 2, "r")?,
                seed,
            )
        }
        "powerlaw" => {
            arity(3, "<n> <m> <iterations>")?;
            gen::eppstein_power_law(
                num(params, 0, "n")?,
                num(params, 1, "m")?,
                num(params, 2, "iterations")?,
                seed,
            )
        }
        "kreg" => {
            arity(2, "<n> <k>")?;
            gen::k_regular_random(num(params, 0, "n")?, num(params, 1, "k")?, seed)
        }
        "grid" => {
            arity(2, "<rows> <cols>")?;
            Ok(gen::grid_2d(num(params, 0, "rows")?, num(params, 1, "cols")?))
        }
        "ring" => {
            arity(2, "<n> <k>")?;
            gen::k_regular_ring(num(params, 0, "n")?, num(params, 1, "k")?)
        }
        _ => {
            return Err(format!(
                "unknown generator `{name}`; valid: er, ba, ws, kleinberg, powerlaw, kreg, grid, ring"
            ))
        }
    };
    g.map_err(|e| e.to_string())
}

fn cmd_bmatrix(args: &[String]) -> u8 {
    let mut positional: Vec<&String> = Vec::new();
    let mut out: Option<PathBuf> = None;
    let mut i = 0;
    while i < args.len() {
        match args[i].as_str() {
            "-o" => {
                i += 1;
                match args.get(i) {
                    Some(p) => out = Some(PathBuf::from(p)),
                    None => return usage("-o expects a file path"),
                }
            }
            s if s.starts_with('-') => return usage(&format!("unknown flag `{s}`")),
            _ => positional.push(&args[i]),
        }
        i += 1;
    }
    let [path] = positional[..] else {
        return usage("bmatrix expects a single .net file");
    };
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {path}: {e}");
            return 2;
        }
    };
    let g = match read_net(&text) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {path}: {e}");
            return 2;
        }
    };
    match b_matrix(&g) {
        Ok(m) => write_output(&m.to_csv(), out.as_deref()),
        Err(e) => {
            eprintln!("error: {e}");
            3
        }
    }
}

fn write_output(text: &str, out: Option<&Path>) -> u8 {
    match out {
        Some(p) => match fs::write(p, text) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", p.display());
                2
            }
        },
        None => {
            print!("{text}");
            0
        }
    }
}
