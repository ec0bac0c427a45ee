//! Acceptance suite: prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use common::*;
use temin::bench::{run_bench, BenchSpec};
use temin::textio::{
    parse_expression, read_pla, render_expression, write_pla, write_pla_cover, VariableNames,
};
use temin::{build_te_map, exact_minimum_cover, overlap, prime_implicants, AnchorPolicy, Mode};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const FOUR_VAR: &str = "A'C'D' + A'BC' + BC'D + ABD + ACD";

fn temin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_temin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn golden_te_map() -> Check {
    let cover = parse_expression(FOUR_VAR, None).unwrap().cover;
    let map = build_te_map(&cover).unwrap();
    let expected: [[i64; 5]; 5] = [
        [-1, 1, 0, 0, 0],
        [1, -1, 1, 0, 0],
        [0, 1, -1, 1, 0],
        [0, 0, 1, -1, 1],
        [0, 0, 0, 1, -1],
    ];
    let matrix = map.matrix();
    for (i, row) in expected.iter().enumerate() {
        ensure!(matrix[i] == row, "row {i}: {:?} != {:?}", matrix[i], row);
    }
    ensure!(map.totals() == [1, 2, 2, 2, 1], "totals {:?}", map.totals());
    ensure!(
        map.quotients() == [1, 0, 0, 0, 1],
        "quotients {:?}",
        map.quotients()
    );
    Ok(())
}

fn golden_four_variable() -> Check {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.json");
    let o = temin(&[
        "minimize",
        "--mode",
        "faithful",
        "--trace",
        trace.to_str().unwrap(),
        "-e",
        FOUR_VAR,
    ]);
    ensure!(o.status.success(), "exit {:?}", o.status.code());
    ensure!(
        stdout(&o) == "A'C'D' + BC'D + ACD\n",
        "output {:?}",
        stdout(&o)
    );

    let json = read_json(&trace);
    let steps = json["iterations"].as_array().unwrap();
    let removed: Vec<&str> = steps.iter().filter_map(|s| s["removed"].as_str()).collect();
    ensure!(removed == ["010-", "11-1"], "removals {removed:?}");
    let last = steps.last().unwrap();
    ensure!(
        last["end_reason"] == "ALL_QUOTIENTS_POSITIVE",
        "end reason {}",
        last["end_reason"]
    );
    ensure!(
        last["totals"] == serde_json::json!([0, 0, 0]),
        "final totals {}",
        last["totals"]
    );
    ensure!(
        last["quotients"] == serde_json::json!([2, 2, 2]),
        "final quotients {}",
        last["quotients"]
    );
    ensure!(
        json["final"] == serde_json::json!(["0-00", "-101", "1-11"]),
        "final {}",
        json["final"]
    );
    ensure!(json["equivalent"] == true, "final cover not equivalent");
    Ok(())
}

fn golden_three_variable() -> Check {
    let input = parse_expression("A'C' + A'B + BC", None).unwrap().cover;
    let o = temin(&["minimize", "--mode", "faithful", "-e", "A'C' + A'B + BC"]);
    ensure!(o.status.success(), "exit {:?}", o.status.code());
    ensure!(stdout(&o) == "A'C' + BC\n", "output {:?}", stdout(&o));
    let names = VariableNames::default_for(3);
    let output = parse_expression(stdout(&o).trim(), Some(&names))
        .unwrap()
        .cover;
    ensure!(
        truth_table(&input) == truth_table(&output),
        "truth tables differ"
    );
    Ok(())
}

fn overlap_closed_form() -> Check {
    let start = Instant::now();
    for n in 1..=4 {
        let cubes = all_cubes(n);
        let sets: Vec<Vec<u64>> = cubes.iter().map(cube_minterms).collect();
        for (i, a) in cubes.iter().enumerate() {
            for (j, b) in cubes.iter().enumerate() {
                let brute = sets[i]
                    .iter()
                    .filter(|m| sets[j].binary_search(m).is_ok())
                    .count() as u64;
                let got = overlap(a, b).unwrap();
                ensure!(
                    got == brute,
                    "{} & {}: {got} != {brute}",
                    a.encoding(),
                    b.encoding()
                );
            }
        }
    }
    let mut rng = TestRng::new(4);
    for _ in 0..10_000 {
        let n = 1 + rng.below(10) as usize;
        let (a, b) = (random_cube(&mut rng, n), random_cube(&mut rng, n));
        let brute = (0..1u64 << n)
            .filter(|&m| cube_has(&a, m) && cube_has(&b, m))
            .count() as u64;
        let got = overlap(&a, &b).unwrap();
        ensure!(
            got == brute,
            "{} & {}: {got} != {brute}",
            a.encoding(),
            b.encoding()
        );
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok(())
}

fn prime_completeness() -> Check {
    let check = |f: &temin::FunctionSpec| -> Check {
        let got = prime_implicants(f).encodings();
        let mut sorted = got.clone();
        sorted.sort();
        let want = brute_force_primes(f);
        ensure!(
            sorted == want,
            "on={:?} dc={:?}: {got:?} != {want:?}",
            f.on().to_vec(),
            f.dc().to_vec()
        );
        Ok(())
    };
    for index in 0..256 {
        check(&function_from_table(3, index))?;
    }
    let mut rng = TestRng::new(5);
    for n in [4, 5] {
        for _ in 0..200 {
            check(&random_function(&mut rng, n, 0.45, 0.15))?;
        }
    }
    Ok(())
}

fn safe_mode_is_sound() -> Check {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let runs: [&[&str]; 2] = [
        &["--exhaustive", "--n", "3"],
        &["--n", "4", "--count", "1000", "--seed", "11"],
    ];
    for extra in runs {
        let summary = dir.path().join("summary.json");
        let mut args = vec![
            "bench",
            "--mode",
            "safe",
            "--csv",
            "/dev/null",
            "--summary",
            summary.to_str().unwrap(),
        ];
        args.extend_from_slice(extra);
        let o = temin(&args);
        ensure!(o.status.success(), "{extra:?}: exit {:?}", o.status.code());
        let json = read_json(&summary);
        let rate = json["configs"][0]["equivalence_rate"].as_f64();
        ensure!(rate == Some(1.0), "{extra:?}: equivalence rate {rate:?}");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok(())
}

fn optimality_measurement() -> Check {
    let modes = vec![Mode::Faithful, Mode::Safe];
    let anchors = vec![AnchorPolicy::TailOnly, AnchorPolicy::AnyEssential];
    let specs = [
        BenchSpec {
            n: 3,
            exhaustive: true,
            modes: modes.clone(),
            anchors: anchors.clone(),
            ..BenchSpec::default()
        },
        BenchSpec {
            n: 4,
            count: 300,
            seed: 7,
            modes: modes.clone(),
            anchors: anchors.clone(),
            ..BenchSpec::default()
        },
        BenchSpec {
            n: 5,
            count: 100,
            seed: 8,
            dc_density: 0.1,
            modes,
            anchors,
            ..BenchSpec::default()
        },
    ];
    for spec in &specs {
        let report = run_bench(spec).unwrap();
        ensure!(
            report.configs.len() == 4,
            "{} configurations",
            report.configs.len()
        );
        for config in &report.configs {
            for row in config.rows.iter().filter(|r| r.equivalent) {
                ensure!(
                    row.te_terms >= row.exact_terms,
                    "n={} row {}: {} < {}",
                    row.n,
                    row.index,
                    row.te_terms,
                    row.exact_terms
                );
            }
        }
        let json: serde_json::Value = serde_json::from_str(&report.summary_json()).unwrap();
        for config in json["configs"].as_array().unwrap() {
            for key in ["equivalence_rate", "optimality_rate"] {
                ensure!(config[key].is_number(), "missing {key} in {config}");
            }
        }
    }

    // The exact oracle against exhaustive subset search.
    let mut functions: Vec<_> = (0..256).map(|i| function_from_table(3, i)).collect();
    let mut rng = TestRng::new(7);
    functions.extend((0..300).map(|_| random_function(&mut rng, 4, 0.5, 0.1)));
    for f in &functions {
        let exact = exact_minimum_cover(f).unwrap();
        let primes = prime_implicants(f);
        let brute = brute_force_min_cover(f, primes.cubes());
        ensure!(
            exact.len() == brute,
            "on={:?}: exact {} != brute {brute}",
            f.on().to_vec(),
            exact.len()
        );
        ensure!(
            f.is_implemented_by(&exact).unwrap(),
            "on={:?}: exact cover wrong",
            f.on().to_vec()
        );
    }
    Ok(())
}

fn round_trips() -> Check {
    let mut rng = TestRng::new(8);
    for _ in 0..1000 {
        let n = 1 + rng.below(10) as usize;
        let cover = random_cover(&mut rng, n, 8);
        let names = VariableNames::default_for(n);

        let text = render_expression(&cover, Some(&names)).unwrap();
        let back = parse_expression(&text, Some(&names)).unwrap().cover;
        ensure!(
            back == cover,
            "expression {text:?}: {:?} != {:?}",
            back.encodings(),
            cover.encodings()
        );

        let pla = write_pla_cover(&cover, Some(&names)).unwrap();
        let parsed = read_pla(&pla).unwrap();
        ensure!(parsed.on == cover, "cover PLA differs:\n{pla}");
        ensure!(parsed.names.as_ref() == Some(&names), "PLA names differ");

        let f = random_function(&mut rng, n, 0.3, 0.1);
        let pla = write_pla(&f, None).unwrap();
        ensure!(
            read_pla(&pla).unwrap().function().unwrap() == f,
            "minterm PLA differs:\n{pla}"
        );
    }
    Ok(())
}

fn determinism() -> Check {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("f.pla");
    let f = temin::FunctionSpec::from_minterms(4, &[0, 2, 3, 5, 7, 8, 13, 15], &[1, 10]).unwrap();
    std::fs::write(&input, write_pla(&f, None).unwrap()).unwrap();
    let input = input.to_str().unwrap().to_string();

    let runs: Vec<Vec<&str>> = vec![
        vec!["primes", &input],
        vec!["temap", "-e", FOUR_VAR],
        vec![
            "minimize",
            "--mode",
            "faithful",
            "--trace",
            "{out}/trace.json",
            "-e",
            FOUR_VAR,
        ],
        vec![
            "minimize",
            "--anchor",
            "essential",
            "--output",
            "pla",
            "--trace",
            "{out}/trace.json",
            &input,
        ],
        vec!["exact", &input],
        vec!["verify", "-e", FOUR_VAR, "-e", "A'C'D' + BC'D + ACD"],
        vec!["kmap", "-e", FOUR_VAR],
        vec![
            "bench",
            "--n",
            "4",
            "--count",
            "200",
            "--seed",
            "3",
            "--mode",
            "both",
            "--anchor",
            "both",
            "--dc-density",
            "0.1",
            "--csv",
            "{out}/rows.csv",
            "--summary",
            "{out}/summary.json",
        ],
        vec!["bench", "--exhaustive", "--n", "2"],
    ];
    for args in runs {
        let mut outputs = vec![];
        for attempt in 0..2 {
            let out = dir.path().join(format!("run{attempt}"));
            std::fs::create_dir_all(&out).unwrap();
            let args: Vec<String> = args
                .iter()
                .map(|a| a.replace("{out}", out.to_str().unwrap()))
                .collect();
            let o = Command::new(env!("CARGO_BIN_EXE_temin"))
                .args(&args)
                .output()
                .unwrap();
            let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(&out)
                .unwrap()
                .map(|e| {
                    let e = e.unwrap();
                    (
                        e.file_name().to_string_lossy().into_owned(),
                        std::fs::read(e.path()).unwrap(),
                    )
                })
                .collect();
            files.sort();
            std::fs::remove_dir_all(&out).unwrap();
            outputs.push((o.status.code(), o.stdout, o.stderr, files));
        }
        ensure!(outputs[0].0 == Some(0), "{args:?}: exit {:?}", outputs[0].0);
        ensure!(outputs[0] == outputs[1], "{args:?}: runs differ");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden overlap map (4 variables)", golden_te_map),
        ("golden minimization (4 variables)", golden_four_variable),
        ("golden minimization (3 variables)", golden_three_variable),
        (
            "overlap closed form matches brute force",
            overlap_closed_form,
        ),
        ("prime implicants match brute force", prime_completeness),
        ("safe mode equivalence rate is 1.0", safe_mode_is_sound),
        (
            "heuristic never beats the exact minimum",
            optimality_measurement,
        ),
        ("expression and PLA round-trips", round_trips),
        ("determinism across repeated runs", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS {} {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
