//! Drives the command-line front end in-process and writes one JSON
//! report per subcommand into a temporary directory.

use lie_torsion::cli::main_with_args;

fn main() {
    let dir = std::env::temp_dir().join("lie-torsion-reports");
    std::fs::create_dir_all(&dir).expect("writable temp dir");
    let runs: [(&str, &[&str]); 6] = [
        (
            "lyndon",
            &[
                "lyndon",
                "--rank",
                "2",
                "--max-degree",
                "5",
                "--expr",
                "[x,[x,y]]",
            ],
        ),
        (
            "verify",
            &["verify", "--c", "3", "--rank", "2", "--trials", "20"],
        ),
        ("torsion", &["torsion", "--prime", "2", "--max-degree", "8"]),
        (
            "theorem",
            &["theorem", "--prime", "3", "--s", "0", "--t", "1"],
        ),
        ("summand", &["summand", "--prime", "3", "--dim", "2"]),
        ("report", &["report", "--prime", "2", "--max-degree", "8"]),
    ];
    for (name, args) in runs {
        let path = dir.join(format!("{name}.json"));
        let mut argv = vec!["lie-torsion".to_string()];
        argv.extend(args.iter().map(|a| a.to_string()));
        argv.extend(["--out".to_string(), path.display().to_string()]);
        let code = main_with_args(argv);
        let text = std::fs::read_to_string(&path).unwrap_or_default();
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap_or_default();
        println!(
            "{name:<8} exit {code}  overallPass {}  -> {}",
            doc["overallPass"],
            path.display()
        );
    }
}
