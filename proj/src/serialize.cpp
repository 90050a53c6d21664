#include "capprox/serialize.hpp"

#include <charconv>
#include <fstream>
#include <memory>

namespace capprox {

namespace {

ordered_json cplx_json(cplx v) { return ordered_json::array({v.real(), v.imag()}); }

cplx cplx_from(const ordered_json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(std::string(what) + ": expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

ordered_json values_json(const std::vector<cplx>& values) {
  ordered_json arr = ordered_json::array();
  for (const cplx& v : values) arr.push_back(cplx_json(v));
  return arr;
}

std::vector<cplx> values_from(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const ordered_json& e : j) out.push_back(cplx_from(e, what));
  return out;
}

const ordered_json& field(const ordered_json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace

ordered_json to_json(const SampledFunction& f) {
  ordered_json j;
  j["n"] = f.grid ? f.grid->size() : 0;
  j["values"] = values_json(f.values);
  if (f.claimed_bound) j["claimed_bound"] = *f.claimed_bound;
  if (f.band_limit) j["band_limit"] = *f.band_limit;
  return j;
}

ordered_json to_json(const AnalyticPolynomial& p) {
  ordered_json j;
  j["degree"] = p.degree();
  j["coeffs"] = values_json(p.coefficients());
  return j;
}

ordered_json to_json(const TrigCoefficients& c) {
  ordered_json j;
  j["window"] = c.window;
  j["coeffs"] = values_json(c.coeff);
  return j;
}

ordered_json to_json(const BoundedAnalyticWitness& w) {
  ordered_json j;
  j["kind"] = to_string(w.kind());
  switch (w.kind()) {
    case WitnessKind::polynomial:
      j["poly"] = to_json(w.poly());
      break;
    case WitnessKind::blaschke: {
      ordered_json zeros = ordered_json::array();
      for (const cplx& a : w.zeros()) zeros.push_back(cplx_json(a));
      j["zeros"] = zeros;
      j["unimodular"] = cplx_json(w.unimodular());
      break;
    }
    case WitnessKind::scaled:
      j["scalar"] = cplx_json(w.scalar());
      j["inner"] = to_json(w.inner());
      break;
  }
  j["bound"] = w.bound();
  return j;
}

ordered_json to_json(const DistanceCertificate& cert) {
  ordered_json j;
  j["lower"] = cert.lower;
  j["upper"] = cert.upper;
  j["approximant"] = to_json(cert.approximant);
  ordered_json d;
  d["grid_n"] = cert.grid_n;
  d["grid_optimum"] = cert.grid_optimum;
  d["inflation"] = cert.inflation;
  d["error_degree"] = cert.error_degree;
  j["diagnostics"] = d;
  return j;
}

ordered_json to_json(const SimplexWeights& w) {
  ordered_json j;
  j["step"] = w.step;
  j["tail_start"] = w.tail_start;
  j["alpha"] = w.alpha;
  return j;
}

ordered_json to_json(const CombinationResult& r) {
  ordered_json j;
  j["weights"] = to_json(r.weights);
  j["u"] = to_json(r.u);
  j["success"] = r.success;
  j["target"] = r.target;
  j["achieved"] = r.achieved;
  j["achieved_grid"] = r.achieved_grid;
  j["inflation"] = r.inflation;
  j["error_degree"] = r.error_degree;
  j["u_bound"] = r.u_bound;
  j["u_grid_max"] = r.u_grid_max;
  j["lower_witness"] = r.lower_witness ? ordered_json(*r.lower_witness)
                                       : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const WeakStarReport& r) {
  ordered_json j;
  j["window"] = r.window;
  j["prefix"] = r.prefix;
  j["tol"] = r.tol;
  j["verdict"] = to_string(r.verdict);
  j["final_deviation"] = r.final_deviation;
  ordered_json w;
  w["n"] = r.worst_n;
  w["k"] = r.worst_k;
  w["deviation"] = r.worst_deviation;
  j["worst"] = w;
  j["deviations"] = r.deviations;
  return j;
}

ordered_json to_json(const StepRecord& r) {
  ordered_json j;
  j["m"] = r.m;
  j["success"] = r.success;
  j["target"] = r.target;
  j["achieved"] = r.achieved;
  j["achieved_grid"] = r.achieved_grid;
  j["u_bound"] = r.u_bound;
  j["u_grid_max"] = r.u_grid_max;
  j["rescale_factor"] = r.rescale_factor;
  j["p_sup"] = r.p_sup;
  j["max_err"] = r.max_err;
  j["median_err"] = r.median_err;
  j["fourier_dev"] = r.fourier_dev ? ordered_json(*r.fourier_dev)
                                   : ordered_json(nullptr);
  j["lower_witness"] = r.lower_witness ? ordered_json(*r.lower_witness)
                                       : ordered_json(nullptr);
  j["note"] = r.note;
  j["weights"] = to_json(r.weights);
  j["p"] = r.success ? to_json(r.p) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const PipelineReport& r) {
  ordered_json j;
  j["bound"] = r.bound;
  j["grid_n"] = r.grid_n;
  j["steps"] = r.steps;
  j["window"] = r.window;
  j["verdict"] = r.verdict;
  ordered_json pre;
  pre["ran"] = r.precheck_ran;
  pre["verdict"] = r.precheck_ran ? ordered_json(to_string(r.precheck_verdict))
                                  : ordered_json(nullptr);
  j["precheck"] = pre;
  ordered_json records = ordered_json::array();
  for (const StepRecord& rec : r.records) records.push_back(to_json(rec));
  j["records"] = records;
  return j;
}

SampledFunction sampled_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("sampled function: expected an object");
  const ordered_json& jn = field(j, "n");
  if (!jn.is_number_integer() || jn.get<int>() < 1)
    throw ParseError("sampled function: bad grid size");
  int n = jn.get<int>();
  SampledFunction f;
  f.grid = make_grid(n);
  f.values = values_from(field(j, "values"), "sampled function values");
  if (f.values.size() != static_cast<size_t>(n))
    throw ParseError("sampled function: value count does not match n");
  if (j.contains("claimed_bound")) {
    const ordered_json& b = j["claimed_bound"];
    if (!b.is_number()) throw ParseError("sampled function: bad claimed bound");
    f.claimed_bound = b.get<double>();
  }
  if (j.contains("band_limit")) {
    const ordered_json& b = j["band_limit"];
    if (!b.is_number_integer() || b.get<int>() < 0)
      throw ParseError("sampled function: bad band limit");
    f.band_limit = b.get<int>();
  }
  f.validate();
  return f;
}

AnalyticPolynomial poly_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("polynomial: expected an object");
  const ordered_json& jd = field(j, "degree");
  if (!jd.is_number_integer() || jd.get<int>() < 0)
    throw ParseError("polynomial: bad degree");
  std::vector<cplx> coeff = values_from(field(j, "coeffs"), "polynomial coeffs");
  if (coeff.size() != static_cast<size_t>(jd.get<int>()) + 1)
    throw ParseError("polynomial: coefficient count does not match degree");
  return AnalyticPolynomial(std::move(coeff));
}

BoundedAnalyticWitness witness_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("witness: expected an object");
  const ordered_json& jk = field(j, "kind");
  if (!jk.is_string()) throw ParseError("witness: bad kind");
  WitnessKind kind = witness_kind_from_string(jk.get<std::string>());
  switch (kind) {
    case WitnessKind::polynomial: {
      const ordered_json& jb = field(j, "bound");
      if (!jb.is_number()) throw ParseError("witness: bad bound");
      return BoundedAnalyticWitness::polynomial(poly_from_json(field(j, "poly")),
                                                jb.get<double>());
    }
    case WitnessKind::blaschke: {
      std::vector<cplx> zeros = values_from(field(j, "zeros"), "witness zeros");
      cplx uni = cplx_from(field(j, "unimodular"), "witness unimodular");
      return BoundedAnalyticWitness::blaschke(std::move(zeros), uni);
    }
    case WitnessKind::scaled: {
      cplx scalar = cplx_from(field(j, "scalar"), "witness scalar");
      return BoundedAnalyticWitness::scaled(witness_from_json(field(j, "inner")),
                                            scalar);
    }
  }
  throw ParseError("witness: unknown kind");
}

SequenceProvider sequence_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("sequence: expected an object");
  const ordered_json& jn = field(j, "grid_n");
  if (!jn.is_number_integer() || jn.get<int>() < 1)
    throw ParseError("sequence: bad grid size");
  const ordered_json& jb = field(j, "uniform_bound");
  if (!jb.is_number()) throw ParseError("sequence: bad uniform bound");
  const ordered_json& jm = field(j, "members");
  if (!jm.is_array() || jm.empty())
    throw ParseError("sequence: members must be a nonempty array");

  int n = jn.get<int>();
  GridPtr grid = make_grid(n);
  auto members = std::make_shared<std::vector<SampledFunction>>();
  members->reserve(jm.size());
  for (const ordered_json& e : jm) {
    SampledFunction f;
    f.grid = grid;
    f.values = values_from(e, "sequence member");
    if (f.values.size() != static_cast<size_t>(n))
      throw ParseError("sequence: member length does not match grid");
    members->push_back(std::move(f));
  }

  SequenceProvider seq;
  seq.grid = grid;
  seq.uniform_bound = jb.get<double>();
  seq.length = static_cast<int>(members->size());
  seq.descriptor = "file";
  seq.generator = [members](int idx) {
    return (*members)[static_cast<size_t>(idx - 1)];
  };
  return seq;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string weakstar_csv(const WeakStarReport& r) {
  std::string out = "n";
  for (int k = -r.window; k <= r.window; ++k) {
    out += ",k=";
    out += std::to_string(k);
  }
  out += "\n";
  for (int n = 1; n <= r.prefix; ++n) {
    out += std::to_string(n);
    const std::vector<double>& row = r.deviations[static_cast<size_t>(n - 1)];
    for (double d : row) {
      out += ",";
      out += format_double(d);
    }
    out += "\n";
  }
  return out;
}

std::string pipeline_csv(const PipelineReport& r) {
  std::string out = "m,success,achieved,sup,max_err,median_err\n";
  for (const StepRecord& rec : r.records) {
    out += std::to_string(rec.m);
    out += rec.success ? ",1," : ",0,";
    out += format_double(rec.achieved);
    out += ",";
    out += format_double(rec.p_sup);
    out += ",";
    out += format_double(rec.max_err);
    out += ",";
    out += format_double(rec.median_err);
    out += "\n";
  }
  return out;
}

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw ConfigError("failed writing " + path);
}

}  // namespace capprox
