#include "vlcrange/serialize.hpp"

#include "vlcrange/decimal.hpp"

namespace vlcrange {

void write_json(JsonWriter& w, const Geometry& g) {
  w.begin_object().field("h_m", g.h()).field("ell_m", g.ell()).field("d_m", g.d()).end_object();
}

void write_json(JsonWriter& w, const NoiseBreakdown& n) {
  w.begin_object()
      .field("var_thermal", n.var_thermal)
      .field("var_background", n.var_background)
      .field("var_dark", n.var_dark)
      .field("var_shot", n.var_shot)
      .field("var_floor", n.var_floor)
      .field("var_total", n.var_total)
      .end_object();
}

void write_json(JsonWriter& w, const BoundResult& b) {
  w.begin_object()
      .field("fisher", b.fisher)
      .field("crlb_sqrt", b.crlb_sqrt)
      .field("crlb_sqrt_legacy", b.crlb_sqrt_legacy)
      .field("ratio", b.ratio);
  w.key("noise");
  write_json(w, b.noise);
  w.end_object();
}

void write_json(JsonWriter& w, const McReport& r) {
  w.begin_object()
      .field("trials", r.trials)
      .field("seed", r.seed)
      .field("true_d", r.true_d)
      .field("mean_estimate", r.mean_estimate)
      .field("bias", r.bias)
      .field("rmse", r.rmse)
      .field("crlb_sqrt_ref", r.crlb_sqrt_ref)
      .field("efficiency", r.efficiency)
      .field("failures", r.failures);
  w.key("search").begin_object().field("lo", r.search.lo).field("hi", r.search.hi).end_object();
  w.field("tol", r.tol).end_object();
}

namespace {

void write_range(JsonWriter& w, std::string_view name, const AxisRange& r) {
  w.key(name).begin_object().field("min", r.min).field("max", r.max);
  w.key("steps").value(r.steps);
  w.end_object();
}

void csv_row(std::string& out, std::initializer_list<double> cells) {
  bool first = true;
  for (double c : cells) {
    if (!first) out += ',';
    first = false;
    out += format_double(c);
  }
  out += '\n';
}

}  // namespace

void write_json(JsonWriter& w, const SweepSpec& s) {
  w.begin_object();
  write_range(w, "ell_range", s.ell_range);
  write_range(w, "h_range", s.h_range);
  w.array("p_t_list", s.p_t_list);
  w.array("m_list", s.m_list);
  w.field("quantity", to_string(s.quantity));
  w.end_object();
}

void write_parameters_json(JsonWriter& w, const SystemParameters& p) {
  w.begin_object();
  for (const auto& f : parameter_schema()) {
    w.key(f.key).number_literal(external_value_text(p, f.key));
  }
  w.end_object();
}

std::string sweep_to_json(const SweepResult& r) {
  JsonWriter w;
  w.begin_object();
  w.field("quantity", to_string(r.spec.quantity));
  w.key("order").begin_array().value("m").value("P_t_W").value("h_m").value("ell_m").end_array();
  w.key("axes").begin_object();
  w.array("m", r.m).array("P_t_W", r.p_t).array("h_m", r.h).array("ell_m", r.ell);
  w.end_object();
  w.array("values", r.values);
  w.key("meta").begin_object();
  w.key("parameters");
  write_parameters_json(w, r.parameters);
  w.key("spec");
  write_json(w, r.spec);
  w.end_object();
  w.end_object();
  return w.str();
}

std::string sweep_to_csv(const SweepResult& r) {
  std::string out = "m,P_t_W,h_m,ell_m,value\n";
  for (std::size_t im = 0; im < r.m.size(); ++im) {
    for (std::size_t ip = 0; ip < r.p_t.size(); ++ip) {
      for (std::size_t ih = 0; ih < r.h.size(); ++ih) {
        for (std::size_t il = 0; il < r.ell.size(); ++il) {
          csv_row(out, {r.m[im], r.p_t[ip], r.h[ih], r.ell[il], r.at(im, ip, ih, il)});
        }
      }
    }
  }
  return out;
}

std::string ell_mean_to_json(const EllMean& r, const SweepResult& source) {
  JsonWriter w;
  w.begin_object();
  w.field("quantity", to_string(source.spec.quantity));
  w.field("reduction", "mean_over_ell");
  w.key("order").begin_array().value("m").value("P_t_W").value("h_m").end_array();
  w.key("axes").begin_object();
  w.array("m", r.m).array("P_t_W", r.p_t).array("h_m", r.h).array("ell_m", source.ell);
  w.end_object();
  w.array("values", r.values);
  w.key("meta").begin_object();
  w.key("parameters");
  write_parameters_json(w, source.parameters);
  w.key("spec");
  write_json(w, source.spec);
  w.end_object();
  w.end_object();
  return w.str();
}

std::string ell_mean_to_csv(const EllMean& r) {
  std::string out = "m,P_t_W,h_m,value\n";
  for (std::size_t im = 0; im < r.m.size(); ++im) {
    for (std::size_t ip = 0; ip < r.p_t.size(); ++ip) {
      for (std::size_t ih = 0; ih < r.h.size(); ++ih) {
        csv_row(out, {r.m[im], r.p_t[ip], r.h[ih], r.at(im, ip, ih)});
      }
    }
  }
  return out;
}

}  // namespace vlcrange
