use critline::table::{parse_table, render_table, TableHeader};
use critline_core::critline::{FunctionId, ZeroRecord};
use critline_core::ComplexValue;
use proptest::prelude::*;

fn records(f: FunctionId, rows: &[(f64, f64, f64)]) -> Vec<ZeroRecord> {
    let mut t = 0.0;
    rows.iter()
        .enumerate()
        .map(|(i, &(dt, residual, width))| {
            t += dt;
            ZeroRecord { function_id: f, index: i + 1, location: ComplexValue::new(0.5, t), residual, width }
        })
        .collect()
}

proptest! {
    #[test]
    fn render_parse_render_is_identity(
        rows in prop::collection::vec((1e-6f64..5.0, 0.0f64..1e-6, 0.0f64..1e-9), 0..40),
        t_max in 1.0f64..1000.0,
        minus in any::<bool>(),
    ) {
        let f = if minus { FunctionId::Tminus } else { FunctionId::Tplus };
        let recs = records(f, &rows);
        let text = render_table(&TableHeader::new(f, t_max, "test"), &recs);
        let (h, back) = parse_table(&text, "mem").unwrap();
        prop_assert_eq!(h.function, f);
        prop_assert_eq!(h.t_max, t_max);
        prop_assert_eq!(&back, &recs);
        prop_assert_eq!(render_table(&h, &back), text);
    }
}

#[test]
fn rejects_out_of_order_indices() {
    let recs = records(FunctionId::Tplus, &[(1.0, 0.0, 0.0), (1.0, 0.0, 0.0)]);
    let text = render_table(&TableHeader::new(FunctionId::Tplus, 10.0, "test"), &recs);
    let broken = text.replace("\nTplus,2,", "\nTplus,3,");
    assert!(parse_table(&broken, "mem").is_err());
}
