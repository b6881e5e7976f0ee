use std::sync::OnceLock;

use num_traits::Signed;

use sturmcert::cert::{
    certificates_to_json, lemma8_rows, parse_certificates, recheck, run_lemma1, run_lemma11, run_lemma7, run_suite,
    Selector, SuiteOutput,
};
use sturmcert::exact::{int, ratio};
use sturmcert::sturm::Verdict;

fn suite() -> &'static SuiteOutput {
    static SUITE: OnceLock<SuiteOutput> = OnceLock::new();
    SUITE.get_or_init(|| run_suite(Selector::All).expect("suite runs"))
}

#[test]
fn suite_has_all_claims() {
    let s = suite();
    assert_eq!(s.certificates.len(), 29);
    assert_eq!(s.informational.len(), 1);
    assert_eq!(s.informational[0].label, "NON-CERTIFIED");
    assert!(s.unexpected_failures().is_empty());
}

#[test]
fn only_n6_is_not_certified() {
    let failed: Vec<&str> = suite()
        .certificates
        .iter()
        .filter(|c| c.verdict == Verdict::NotCertified)
        .map(|c| c.claim_id.as_str())
        .collect();
    assert_eq!(failed, ["lemma07-n06"]);
    let n6 = suite().certificates.iter().find(|c| c.claim_id == "lemma07-n06").unwrap();
    assert_eq!(n6.root_count, 2);
}

#[test]
fn positive_certificates_survive_spot_checks() {
    for c in suite().certificates.iter().filter(|c| c.verdict == Verdict::Positive) {
        let (lo, hi) = (c.interval.lo(), c.interval.hi());
        let step = (hi - lo) / int(49);
        for k in 0..50 {
            let t = lo + &step * int(k);
            assert!(c.polynomial.evaluate(&t).is_positive(), "{} at {}", c.claim_id, t);
        }
    }
}

#[test]
fn serialized_certificates_recheck() {
    let text = certificates_to_json(&suite().certificates).unwrap();
    let parsed = parse_certificates(&text).unwrap();
    assert_eq!(parsed.len(), 29);
    for c in &parsed {
        assert!(recheck(c).unwrap(), "{}", c.claim_id);
    }
    let mut forged = parsed.iter().find(|c| c.claim_id == "lemma07-n06").unwrap().clone();
    forged.verdict = Verdict::Positive;
    forged.root_count = 0;
    assert!(!recheck(&forged).unwrap());
}

#[test]
fn runs_are_byte_identical() {
    let first = certificates_to_json(&suite().certificates).unwrap();
    let second = certificates_to_json(&run_suite(Selector::All).unwrap().certificates).unwrap();
    assert_eq!(first, second);
    let a = certificates_to_json(&run_lemma1().unwrap().0).unwrap();
    let b = certificates_to_json(&run_lemma1().unwrap().0).unwrap();
    assert_eq!(a, b);
    assert_eq!(
        certificates_to_json(&run_lemma7().unwrap()).unwrap(),
        certificates_to_json(&run_lemma7().unwrap()).unwrap()
    );
    assert_eq!(
        certificates_to_json(&[run_lemma11().unwrap()]).unwrap(),
        certificates_to_json(&[run_lemma11().unwrap()]).unwrap()
    );
}

#[test]
fn lemma8_intervals_are_outward() {
    let tight = ratio(1, 1_000_000);
    for (i, row) in lemma8_rows().iter().enumerate() {
        let id = format!("lemma08-row{}", i + 1);
        let cert = suite().certificates.iter().find(|c| c.claim_id == id).unwrap();
        let enc = row.y_enclosure(&tight).unwrap();
        assert!(cert.interval.lo() <= enc.lo(), "{id} lower");
        assert!(enc.hi() <= cert.interval.hi(), "{id} upper");
    }
}

#[test]
fn lemma8_first_row_uses_printed_interval() {
    let row1 = suite().certificates.iter().find(|c| c.claim_id == "lemma08-row1").unwrap();
    assert_eq!(row1.interval.lo(), &ratio(964, 1000));
    assert_eq!(row1.interval.hi(), &ratio(981, 1000));
}
