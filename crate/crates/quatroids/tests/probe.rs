//! Scratch sweep: representative search + pencil count across all counted rows.
use quatroids::data::{classification, RowKind};
use quatroids::pencil::count::count_rational;
use quatroids::quatroid::profile::reducible_profile;
use quatroids::realization::search::search_generic_representative;
use std::time::Instant;

#[test]
#[ignore]
fn sweep_counted_rows() {
    let c = classification();
    let mut bad = Vec::new();
    for row in &c.rows {
        let RowKind::Counted { d, .. } = row.kind else { continue };
        let t0 = Instant::now();
        let profile = reducible_profile(&row.pair);
        match search_generic_representative(&row.pair, 0, 400) {
            Ok(p) => {
                let out = count_rational(&p).unwrap();
                let ok = out.rational_count == d as i64;
                println!(
                    "row {:3}  d_table={:2}  profile={:2}  counted={:2}  {}  [{:.1}s]",
                    row.index, d, profile.rational_count(), out.rational_count,
                    if ok { "OK" } else { "MISMATCH" },
                    t0.elapsed().as_secs_f32()
                );
                if !ok { bad.push(row.index); }
            }
            Err(e) => {
                println!("row {:3}  d_table={:2}  SEARCH FAILED: {}  [{:.1}s]", row.index, d, e, t0.elapsed().as_secs_f32());
                bad.push(row.index);
            }
        }
    }
    assert!(bad.is_empty(), "failing rows: {:?}", bad);
}
