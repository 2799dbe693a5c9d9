//! Drinfeld double presentation of a colored datum and its single-copy quotient test.
//!
//! Run with `cargo run --example drinfeld_double`.

use chroma::datum::DatumJson;
use chroma::doubles::{is_color_coinvariants, presentation, retractions, single_copy_color_check};

fn main() {
    for (name, src) in [("c3_rank2", include_str!("../data/c3_rank2.json")), ("c3_symmetric", include_str!("../data/c3_symmetric.json"))] {
        let d = serde_json::from_str::<DatumJson>(src).unwrap().build().unwrap();
        println!("== {name}");
        let p = presentation(&d, true);
        println!("{}", serde_json::to_string_pretty(&p).unwrap());
        let report = single_copy_color_check(&d);
        println!("single copy: {}", serde_json::to_string(&report).unwrap());
        let rets = retractions(&d).unwrap();
        let color = rets.iter().filter(|r| is_color_coinvariants(r)).count();
        println!("{} retractions, {color} with color coinvariants", rets.len());
    }
}
