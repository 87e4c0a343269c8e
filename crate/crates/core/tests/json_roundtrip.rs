use weil::corpus::{random_jacobi, random_plus_space, rng};
use weil::io::{read_json, write_json, CycloJson, Expansion, ExpansionFile, JacobiFile};
use weil::isomap::split_to_vector;
use weil::weilrep::rho_s;
use weil::{CyclotomicNumber, DiscriminantForm};

#[test]
fn expansions_survive_files() {
    let dir = tempfile::tempdir().unwrap();
    let mut r = rng(4);
    for (m, k) in [(1u64, 0i64), (2, 1), (5, 0), (7, 1)] {
        let f = random_plus_space(&mut r, m, k, -10, 30, 0.5);
        let p = dir.path().join(format!("f{m}.json"));
        write_json(&p, &ExpansionFile::from_scalar(&f, m, k)).unwrap();
        let back = read_json::<ExpansionFile>(&p).unwrap().decode().unwrap();
        assert_eq!(back, Expansion::Scalar { f: f.clone(), m, k });

        let v = split_to_vector(&f, m, k).unwrap();
        let p = dir.path().join(format!("v{m}.json"));
        write_json(&p, &ExpansionFile::from_vector(&v, k).unwrap()).unwrap();
        let back = read_json::<ExpansionFile>(&p).unwrap().decode().unwrap();
        assert_eq!(back, Expansion::Vector { f: v, k });
    }
}

#[test]
fn jacobi_forms_survive_files() {
    let dir = tempfile::tempdir().unwrap();
    let mut r = rng(8);
    for m in 1..=5 {
        let phi = random_jacobi(&mut r, 3, m, -20, 20, 0.5, m % 2 == 0);
        let p = dir.path().join("phi.json");
        write_json(&p, &JacobiFile::from_form(&phi)).unwrap();
        assert_eq!(read_json::<JacobiFile>(&p).unwrap().decode().unwrap(), phi);
    }
}

#[test]
fn weil_matrix_entries_round_trip() {
    for m in [1u64, 3, 6] {
        let s = rho_s(&DiscriminantForm::new(m));
        for i in 0..s.matrix.rows() {
            for j in 0..s.matrix.cols() {
                let x = s.entry(i, j);
                let text = serde_json::to_string(&CycloJson::from(x)).unwrap();
                let back: CycloJson = serde_json::from_str(&text).unwrap();
                assert_eq!(&CyclotomicNumber::try_from(&back).unwrap(), x);
            }
        }
    }
}

#[test]
fn malformed_documents_are_rejected() {
    let bad = [
        r#"{"kind":"scalar","m":1,"k":0,"weight_num":1,"coeffs":[{"n":"x"}],"window":["0","1"]}"#,
        r#"{"kind":"scalar","m":1,"k":0,"weight_num":1,"coeffs":[{"n":"5"}],"window":["0","1"]}"#,
        r#"{"kind":"vector","m":1,"k":0,"weight_num":1,"coeffs":[{"n":"0"}],"window":["0","1"]}"#,
        r#"{"kind":"scalar","m":0,"k":0,"weight_num":1,"coeffs":[],"window":["0","1"]}"#,
        r#"{"kind":"scalar","m":1,"k":0,"weight_num":1,"coeffs":[{"n":"1","c_plus":"1/0"}],"window":["0","1"]}"#,
    ];
    for text in bad {
        let file: ExpansionFile = serde_json::from_str(text).unwrap();
        assert!(file.decode().is_err(), "{text}");
    }
    let j: JacobiFile =
        serde_json::from_str(r#"{"kind":"jacobi","k":2,"m":1,"c_plus":[{"D":1,"r":0,"v":"1"}]}"#)
            .unwrap();
    assert!(j.decode().is_err());
    let c: CycloJson = serde_json::from_str(r#"{"N":8,"coeffs":[["0.5",1]]}"#).unwrap();
    assert!(CyclotomicNumber::try_from(&c).is_err());
}
