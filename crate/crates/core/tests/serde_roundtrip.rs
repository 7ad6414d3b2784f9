use dioph_core::classforms::h_form;
use dioph_core::descent::{descend, DescentInstance};
use dioph_core::identities::{residue_checks, sampled_expansions};
use dioph_core::lehmer::{is_defective, verify_table1};
use dioph_core::search::{run_search, SearchConfig};
use dioph_core::{ExpansionKind, LehmerPair};
use serde::{de::DeserializeOwned, Serialize};

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(v: &T) {
    let s = serde_json::to_string(v).unwrap();
    let back: T = serde_json::from_str(&s).unwrap();
    assert_eq!(&back, v, "{s}");
}

#[test]
fn reports_round_trip() {
    round_trip(&verify_table1());
    round_trip(&is_defective(&LehmerPair::new(14, 9).unwrap(), 7).unwrap());
    round_trip(&h_form(-56).unwrap());
    let inst = DescentInstance::new(2, 3, 5, 1, 3).unwrap();
    round_trip(&inst);
    round_trip(&descend(&inst).unwrap());
    round_trip(&residue_checks());
    round_trip(&sampled_expansions(ExpansionKind::GammaFifth, 10, 1));
    let mut r = run_search(&SearchConfig::variant(4, 10, 5, 5)).unwrap();
    // elapsed is serialised in whole milliseconds
    r.elapsed = std::time::Duration::from_millis(r.elapsed.as_millis() as u64);
    round_trip(&r);
}

#[test]
fn big_values_serialise_as_strings() {
    let p = LehmerPair::new(1, 2).unwrap();
    let v = serde_json::to_value(&p).unwrap();
    assert_eq!(v["r"], "1");
    assert_eq!(v["q"], "2");
}
