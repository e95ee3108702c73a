mod common;

use std::path::Path;

use common::{hlysa, root};
use hlysa_cli::files::{AlgebraFile, DeformationFile, FileError, IsoFile, RepFile};
use hlysa_cli::run_args;

fn fixture(name: &str) -> std::path::PathBuf {
    root().join("fixtures").join(name)
}

fn base_of(name: &str) -> hlysa_core::HomLYSA {
    let stem = name.trim_end_matches(".json").split('_').next().unwrap();
    AlgebraFile::load(&fixture(&format!("{stem}.json"))).unwrap().to_algebra().unwrap()
}

#[test]
fn fixture_files_are_canonical() {
    for entry in std::fs::read_dir(root().join("fixtures")).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_str().unwrap().to_string();
        let text = std::fs::read_to_string(&path).unwrap();
        let again = if name.ends_with("_rep.json") {
            let f = RepFile::parse(&text).unwrap();
            RepFile::from_rep(&f.to_rep(base_of(&name).space()).unwrap(), f.name.as_deref())
        } else if name.ends_with("_deformation.json") {
            let f = DeformationFile::parse(&text).unwrap();
            DeformationFile::from_deformation(&f.to_deformation(&base_of(&name)).unwrap(), f.name.as_deref())
        } else if name.ends_with("_iso.json") {
            let f = IsoFile::parse(&text).unwrap();
            IsoFile::from_iso(&f.to_iso(&base_of(&name)).unwrap(), f.name.as_deref())
        } else {
            AlgebraFile::parse(&text).unwrap().canonical().unwrap()
        };
        assert_eq!(again, text, "{name}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(hlysa(&["verify", "fixtures/a1.json"]).0, 0);
    assert_eq!(hlysa(&["verify", "fixtures/a1_broken_skew.json"]).0, 1);
    assert_eq!(hlysa(&["verify", "fixtures/no_such_file.json"]).0, 2);
    assert_eq!(hlysa(&["verify"]).0, 2);
    assert_eq!(hlysa(&["frobnicate"]).0, 2);
    assert_eq!(hlysa(&["deform", "verify", "fixtures/a0.json", "fixtures/a0_a1_deformation.json"]).0, 0);
    assert_eq!(hlysa(&["deform", "trivialize", "fixtures/a1.json", "fixtures/a1_coboundary_deformation.json"]).0, 0);
}

fn write_tmp(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn malformed_inputs_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let good = std::fs::read_to_string(fixture("a1.json")).unwrap();
    let cases = [
        ("zero_denominator.json", good.replace("\"-1\"", "\"1/0\"")),
        ("duplicate.json", good.replace("[1,0,1,\"-1\"]", "[0,1,1,\"2\"]")),
        ("out_of_range.json", good.replace("[1,0,1,\"-1\"]", "[1,0,5,\"-1\"]")),
        ("not_json.json", "{".to_string()),
        ("unknown_field.json", good.replace("\"bracket3\"", "\"bracket4\"")),
    ];
    for (name, text) in cases {
        let path = write_tmp(dir.path(), name, &text);
        let (code, out) = run_args(["hlysa", "verify", path.as_str()]);
        assert_eq!(code, 2, "{name}: {out}");
    }
    assert!(matches!(AlgebraFile::parse(&cases_text(&good)).unwrap().to_algebra(), Err(FileError::Duplicate { .. })));
}

fn cases_text(good: &str) -> String {
    good.replace("[1,0,1,\"-1\"]", "[0,1,1,\"2\"]")
}

#[test]
fn parity_violations_are_rejected() {
    // An even bracket cannot send two even vectors to an odd one.
    let text = std::fs::read_to_string(fixture("a1.json")).unwrap().replace("\"bracket3\": []", "\"bracket3\": [[0,0,0,1,\"1\"]]");
    assert!(AlgebraFile::parse(&text).unwrap().to_algebra().is_err());
}

#[test]
fn output_files_load_back() {
    let dir = tempfile::tempdir().unwrap();
    let iso = dir.path().join("iso.json").display().to_string();
    let (code, _) = run_args([
        "hlysa",
        "deform",
        "trivialize",
        fixture("a1.json").to_str().unwrap(),
        fixture("a1_coboundary_deformation.json").to_str().unwrap(),
        "--iso-out",
        iso.as_str(),
    ]);
    assert_eq!(code, 0);
    let a1 = base_of("a1.json");
    IsoFile::load(Path::new(&iso)).unwrap().to_iso(&a1).unwrap();

    let out = dir.path().join("moved.json").display().to_string();
    let (code, _) = run_args([
        "hlysa",
        "deform",
        "transport",
        fixture("a1.json").to_str().unwrap(),
        fixture("a1_null_deformation.json").to_str().unwrap(),
        fixture("a1_iso.json").to_str().unwrap(),
        "--out",
        out.as_str(),
    ]);
    assert_eq!(code, 0);
    let moved = DeformationFile::load(Path::new(&out)).unwrap().to_deformation(&a1).unwrap();
    // Transporting the null deformation gives a trivial one.
    let (code, _) = run_args([
        "hlysa",
        "deform",
        "trivialize",
        fixture("a1.json").to_str().unwrap(),
        out.as_str(),
    ]);
    assert_eq!(code, 0);
    let again = DeformationFile::from_deformation(&moved, None);
    assert_eq!(DeformationFile::parse(&again).unwrap().to_deformation(&a1).unwrap(), moved);
}

#[test]
fn human_and_machine_formats_agree_on_exit_code() {
    for args in [&["verify", "fixtures/a1_broken_skew.json"][..], &["cohomology", "fixtures/a1.json"][..]] {
        let human = hlysa(args).0;
        let mut m = vec!["--format", "machine"];
        m.extend_from_slice(args);
        assert_eq!(human, hlysa(&m).0);
    }
}

#[test]
fn seed_controls_random_reps() {
    let args = |seed: &'static str| ["--format", "machine", "rep", "fixtures/a1.json", "--random", "1:1", "--samples", "6", "--seed", seed];
    assert_eq!(hlysa(&args("7")).1, hlysa(&args("7")).1);
    assert_ne!(hlysa(&args("7")).1, hlysa(&args("8")).1);
}
