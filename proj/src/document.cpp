#include "hopfpi/document.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace hopfpi {
namespace {

using nlohmann::json;

constexpr const char* kFormatVersion = "hopfpi/1";

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError("document error at " + path + ": " + what);
}

// Re-anchors InputErrors thrown by constructors that do not know where in
// the document their data came from.  Errors that already carry a location
// pass through untouched.
template <typename Fn>
decltype(auto) at_path(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    std::string w = e.what();
    if (w.rfind("document error at ", 0) == 0) throw;
    fail(path, w);
  }
}

void expect_keys(const json& j, const std::string& path,
                 const std::vector<std::string>& keys) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& k : keys) {
    if (!j.contains(k)) fail(path, "missing key \"" + k + "\"");
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
      fail(path, "unknown key \"" + it.key() + "\"");
    }
  }
}

int expect_int(const json& j, const std::string& path) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    fail(path, "expected an integer");
  }
  auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    fail(path, "integer out of range");
  }
  return static_cast<int>(v);
}

std::uint64_t expect_uint(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  fail(path, "expected a nonnegative integer");
}

std::string expect_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const json& expect_array(const json& j, const std::string& path, int size) {
  if (!j.is_array()) fail(path, "expected an array");
  if (static_cast<int>(j.size()) != size) {
    fail(path, "expected " + std::to_string(size) + " entries, found " +
                   std::to_string(j.size()));
  }
  return j;
}

std::string idx(const std::string& path, int i) {
  return path + "[" + std::to_string(i) + "]";
}

std::vector<int> parse_int_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (int i = 0; i < static_cast<int>(j.size()); ++i) {
    out.push_back(expect_int(j[i], idx(path, i)));
  }
  return out;
}

// ---- field envelope ----

Field parse_field(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  std::string kind =
      j.contains("kind") ? expect_string(j.at("kind"), path + ".kind") : "";
  if (kind == "rational") {
    expect_keys(j, path, {"kind"});
    return Field::rationals();
  }
  if (kind == "prime") {
    expect_keys(j, path, {"kind", "p"});
    std::uint64_t p = expect_uint(j.at("p"), path + ".p");
    return at_path(path + ".p", [&] { return Field::prime(p); });
  }
  fail(path, "field kind must be \"rational\" or \"prime\"");
}

json field_json(const Field& f) {
  if (f.is_rational()) return json{{"kind", "rational"}};
  return json{{"kind", "prime"}, {"p", f.p}};
}

// ---- matrices ----

Mat parse_mat(const json& j, const std::string& path, const Field& f) {
  expect_keys(j, path, {"cols", "entries", "rows"});
  int rows = expect_int(j.at("rows"), path + ".rows");
  int cols = expect_int(j.at("cols"), path + ".cols");
  if (rows < 0 || cols < 0) fail(path, "negative matrix shape");
  const json& e = expect_array(j.at("entries"), path + ".entries", rows);
  Mat m(rows, cols, f);
  for (int i = 0; i < rows; ++i) {
    const json& row = expect_array(e[i], idx(path + ".entries", i), cols);
    for (int c = 0; c < cols; ++c) {
      const json& cell = row[c];
      if (!cell.is_string()) {
        fail(idx(idx(path + ".entries", i), c), "entries are scalar strings");
      }
      try {
        m.at(i, c) = Scalar::parse(cell.get<std::string>(), f);
      } catch (const InputError& err) {
        fail(idx(idx(path + ".entries", i), c), err.what());
      }
    }
  }
  return m;
}

json mat_json(const Mat& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    entries.push_back(std::move(row));
  }
  return json{
      {"cols", m.cols()}, {"entries", std::move(entries)}, {"rows", m.rows()}};
}

std::vector<Mat> parse_mat_list(const json& j, const std::string& path,
                                const Field& f, int size) {
  expect_array(j, path, size);
  std::vector<Mat> out;
  out.reserve(size);
  for (int i = 0; i < size; ++i) out.push_back(parse_mat(j[i], idx(path, i), f));
  return out;
}

json mat_list_json(const std::vector<Mat>& ms) {
  json out = json::array();
  for (const Mat& m : ms) out.push_back(mat_json(m));
  return out;
}

// Bilinear blocks [a][b] with per-index input dims and an expected output
// dim per (a, b); out_dim(a, b) < 0 means the row count is free.
template <typename OutDim>
std::vector<std::vector<StructureTensor>> parse_tensor_grid(
    const json& j, const std::string& path, const Field& f,
    const std::vector<int>& in1_dims, const std::vector<int>& in2_dims,
    OutDim out_dim) {
  int n1 = static_cast<int>(in1_dims.size());
  int n2 = static_cast<int>(in2_dims.size());
  expect_array(j, path, n1);
  std::vector<std::vector<StructureTensor>> out(n1);
  for (int a = 0; a < n1; ++a) {
    const json& row = expect_array(j[a], idx(path, a), n2);
    for (int b = 0; b < n2; ++b) {
      std::string p = idx(idx(path, a), b);
      Mat m = parse_mat(row[b], p, f);
      int want = out_dim(a, b);
      if (want >= 0 && m.rows() != want) {
        fail(p, "expected " + std::to_string(want) + " rows, found " +
                    std::to_string(m.rows()));
      }
      out[a].push_back(at_path(p, [&] {
        return StructureTensor::from_matrix(in1_dims[a], in2_dims[b],
                                            std::move(m));
      }));
    }
  }
  return out;
}

json tensor_grid_json(const std::vector<std::vector<StructureTensor>>& g) {
  json out = json::array();
  for (const auto& row : g) {
    json r = json::array();
    for (const auto& st : row) r.push_back(mat_json(st.m));
    out.push_back(std::move(r));
  }
  return out;
}

// ---- groups ----

FiniteGroup parse_group(const json& j, const std::string& path) {
  expect_keys(j, path, {"names", "table"});
  const json& jn = j.at("names");
  if (!jn.is_array()) fail(path + ".names", "expected an array");
  std::vector<std::string> names;
  for (int i = 0; i < static_cast<int>(jn.size()); ++i) {
    names.push_back(expect_string(jn[i], idx(path + ".names", i)));
  }
  const json& jt = j.at("table");
  if (!jt.is_array()) fail(path + ".table", "expected an array");
  std::vector<std::vector<int>> table;
  for (int i = 0; i < static_cast<int>(jt.size()); ++i) {
    table.push_back(parse_int_list(jt[i], idx(path + ".table", i)));
  }
  return at_path(path, [&] {
    return FiniteGroup(std::move(names), std::move(table));
  });
}

json group_json(const FiniteGroup& g) {
  return json{{"names", g.names()}, {"table", g.table()}};
}

// ---- payloads ----

HopfPiAlgebra parse_hopf_payload(const json& j, const std::string& path,
                                 const Field& f) {
  expect_keys(j, path,
              {"antipode", "comult", "counit", "dims", "group", "mult",
               "unit"});
  FiniteGroup g = parse_group(j.at("group"), path + ".group");
  std::vector<int> dims = parse_int_list(j.at("dims"), path + ".dims");
  GradedSpace space = at_path(path + ".dims", [&] {
    return GradedSpace(g, dims);
  });
  int n = g.size();
  HopfPiAlgebra h{
      std::move(space),
      f,
      parse_tensor_grid(j.at("mult"), path + ".mult", f, dims, dims,
                        [&](int a, int b) { return dims[g.mul(a, b)]; }),
      parse_mat(j.at("unit"), path + ".unit", f),
      parse_mat_list(j.at("comult"), path + ".comult", f, n),
      parse_mat_list(j.at("counit"), path + ".counit", f, n),
      GradedLinearMap{inverse_shift(g),
                      parse_mat_list(j.at("antipode"), path + ".antipode", f,
                                     n)}};
  at_path(path, [&] { validate_shapes(h); });
  return h;
}

json hopf_payload_json(const HopfPiAlgebra& h) {
  return json{{"antipode", mat_list_json(h.antipode.blocks)},
              {"comult", mat_list_json(h.comult)},
              {"counit", mat_list_json(h.counit)},
              {"dims", h.space.dims},
              {"group", group_json(h.group())},
              {"mult", tensor_grid_json(h.mult)},
              {"unit", mat_json(h.unit)}};
}

HopfPiBrace parse_brace_payload(const json& j, const std::string& path,
                                const Field& f) {
  expect_keys(j, path,
              {"circle_antipode", "circle_mult", "circle_unit", "comult",
               "counit", "dims", "dot_antipode", "dot_mult", "dot_unit",
               "group"});
  FiniteGroup g = parse_group(j.at("group"), path + ".group");
  std::vector<int> dims = parse_int_list(j.at("dims"), path + ".dims");
  GradedSpace space = at_path(path + ".dims", [&] {
    return GradedSpace(g, dims);
  });
  int n = g.size();
  auto product_dim = [&](int a, int b) { return dims[g.mul(a, b)]; };
  HopfPiBrace b{
      std::move(space),
      f,
      parse_mat_list(j.at("comult"), path + ".comult", f, n),
      parse_mat_list(j.at("counit"), path + ".counit", f, n),
      parse_tensor_grid(j.at("dot_mult"), path + ".dot_mult", f, dims, dims,
                        product_dim),
      parse_mat(j.at("dot_unit"), path + ".dot_unit", f),
      GradedLinearMap{inverse_shift(g),
                      parse_mat_list(j.at("dot_antipode"),
                                     path + ".dot_antipode", f, n)},
      parse_tensor_grid(j.at("circle_mult"), path + ".circle_mult", f, dims,
                        dims, product_dim),
      parse_mat(j.at("circle_unit"), path + ".circle_unit", f),
      GradedLinearMap{inverse_shift(g),
                      parse_mat_list(j.at("circle_antipode"),
                                     path + ".circle_antipode", f, n)}};
  at_path(path, [&] {
    validate_shapes(b.dot());
    validate_shapes(b.circle());
  });
  return b;
}

json brace_payload_json(const HopfPiBrace& b) {
  return json{{"circle_antipode", mat_list_json(b.circle_antipode.blocks)},
              {"circle_mult", tensor_grid_json(b.circle_mult)},
              {"circle_unit", mat_json(b.circle_unit)},
              {"comult", mat_list_json(b.comult)},
              {"counit", mat_list_json(b.counit)},
              {"dims", b.space.dims},
              {"dot_antipode", mat_list_json(b.dot_antipode.blocks)},
              {"dot_mult", tensor_grid_json(b.dot_mult)},
              {"dot_unit", mat_json(b.dot_unit)},
              {"group", group_json(b.group())}};
}

MatchedPair parse_matched_pair_payload(const json& j, const std::string& path,
                                       const Field& f) {
  expect_keys(j, path, {"h", "k", "to_h", "to_k"});
  MatchedPair mp{parse_hopf_payload(j.at("k"), path + ".k", f),
                 parse_hopf_payload(j.at("h"), path + ".h", f),
                 {},
                 {}};
  const auto& hd = mp.h.space.dims;
  const auto& kd = mp.k.space.dims;
  mp.to_k = parse_tensor_grid(j.at("to_k"), path + ".to_k", f, hd, kd,
                              [&](int, int g) { return kd[g]; });
  mp.to_h = parse_tensor_grid(j.at("to_h"), path + ".to_h", f, hd, kd,
                              [&](int a, int) { return hd[a]; });
  return mp;
}

json matched_pair_payload_json(const MatchedPair& mp) {
  return json{{"h", hopf_payload_json(mp.h)},
              {"k", hopf_payload_json(mp.k)},
              {"to_h", tensor_grid_json(mp.to_h)},
              {"to_k", tensor_grid_json(mp.to_k)}};
}

PostHopfStructure parse_post_hopf_payload(const json& j,
                                          const std::string& path,
                                          const Field& f) {
  expect_keys(j, path, {"carrier", "triangle"});
  PostHopfStructure ph{parse_hopf_payload(j.at("carrier"), path + ".carrier",
                                          f),
                       {}};
  const auto& dims = ph.hopf.space.dims;
  ph.triangle = parse_tensor_grid(j.at("triangle"), path + ".triangle", f,
                                  dims, dims,
                                  [&](int, int b) { return dims[b]; });
  return ph;
}

json post_hopf_payload_json(const PostHopfStructure& ph) {
  return json{{"carrier", hopf_payload_json(ph.hopf)},
              {"triangle", tensor_grid_json(ph.triangle)}};
}

RotaBaxterOperator parse_rota_baxter_payload(const json& j,
                                             const std::string& path,
                                             const Field& f) {
  expect_keys(j, path, {"blocks", "carrier"});
  RotaBaxterOperator rb{parse_hopf_payload(j.at("carrier"), path + ".carrier",
                                           f),
                        {}};
  const FiniteGroup& g = rb.hopf.group();
  rb.b.shift = inverse_shift(g);
  rb.b.blocks =
      parse_mat_list(j.at("blocks"), path + ".blocks", f, g.size());
  for (int a = 0; a < g.size(); ++a) {
    const Mat& m = rb.b.blocks[a];
    if (m.rows() != rb.hopf.dim(g.inv(a)) || m.cols() != rb.hopf.dim(a)) {
      fail(idx(path + ".blocks", a), "block must map grade " +
                                         std::to_string(a) +
                                         " into its inverse grade");
    }
  }
  return rb;
}

json rota_baxter_payload_json(const RotaBaxterOperator& rb) {
  return json{{"blocks", mat_list_json(rb.b.blocks)},
              {"carrier", hopf_payload_json(rb.hopf)}};
}

FactorizationInput parse_factorization_payload(const json& j,
                                               const std::string& path,
                                               const Field& f) {
  expect_keys(j, path, {"graded_factor", "unit_factor"});
  const json& list = j.at("graded_factor");
  if (!list.is_array()) fail(path + ".graded_factor", "expected an array");
  FactorizationInput fi;
  fi.unit_factor = parse_mat(j.at("unit_factor"), path + ".unit_factor", f);
  for (int i = 0; i < static_cast<int>(list.size()); ++i) {
    fi.graded_factor.push_back(
        parse_mat(list[i], idx(path + ".graded_factor", i), f));
  }
  return fi;
}

json factorization_payload_json(const FactorizationInput& fi) {
  return json{{"graded_factor", mat_list_json(fi.graded_factor)},
              {"unit_factor", mat_json(fi.unit_factor)}};
}

Document::Value parse_action_payload(const json& j, const std::string& path,
                                     const Field& f) {
  if (!j.is_object()) fail(path, "expected an object");
  std::string shape =
      j.contains("shape") ? expect_string(j.at("shape"), path + ".shape") : "";
  if (shape == "module") {
    expect_keys(j, path, {"acting_dims", "blocks", "shape", "target_dims"});
    ModuleAction ma;
    ma.acting_dims = parse_int_list(j.at("acting_dims"),
                                    path + ".acting_dims");
    ma.target_dims = parse_int_list(j.at("target_dims"),
                                    path + ".target_dims");
    for (int d : ma.acting_dims) {
      if (d < 0) fail(path + ".acting_dims", "negative dimension");
    }
    for (int d : ma.target_dims) {
      if (d < 0) fail(path + ".target_dims", "negative dimension");
    }
    ma.blocks = parse_tensor_grid(
        j.at("blocks"), path + ".blocks", f, ma.acting_dims, ma.target_dims,
        [&](int, int g) { return ma.target_dims[g]; });
    return ma;
  }
  if (shape == "family") {
    expect_keys(j, path, {"blocks", "group", "shape"});
    MapFamily mf{parse_group(j.at("group"), path + ".group"), {}};
    mf.blocks = parse_mat_list(j.at("blocks"), path + ".blocks", f,
                               mf.group.size());
    for (int i = 0; i < static_cast<int>(mf.blocks.size()); ++i) {
      if (mf.blocks[i].rows() != mf.blocks[i].cols()) {
        fail(idx(path + ".blocks", i), "family blocks must be square");
      }
    }
    return mf;
  }
  fail(path, "action shape must be \"module\" or \"family\"");
}

json action_payload_json(const ModuleAction& ma) {
  return json{{"acting_dims", ma.acting_dims},
              {"blocks", tensor_grid_json(ma.blocks)},
              {"shape", "module"},
              {"target_dims", ma.target_dims}};
}

json action_payload_json(const MapFamily& mf) {
  return json{{"blocks", mat_list_json(mf.blocks)},
              {"group", group_json(mf.group)},
              {"shape", "family"}};
}

}  // namespace

std::string Document::kind() const {
  switch (value.index()) {
    case 0: return "group";
    case 1: return "hopf_pi_algebra";
    case 2: return "brace";
    case 3: return "matched_pair";
    case 4: return "post_hopf";
    case 5: return "rota_baxter";
    case 6: return "factorization";
    default: return "action";  // module and family shapes
  }
}

Document make_document(FiniteGroup g) {
  return Document{Field::rationals(), std::move(g)};
}
Document make_document(HopfPiAlgebra h) {
  Field f = h.field;
  return Document{f, std::move(h)};
}
Document make_document(HopfPiBrace b) {
  Field f = b.field;
  return Document{f, std::move(b)};
}
Document make_document(MatchedPair mp) {
  if (!(mp.k.field == mp.h.field)) {
    throw InputError("matched pair mixes scalar fields");
  }
  Field f = mp.k.field;
  return Document{f, std::move(mp)};
}
Document make_document(PostHopfStructure ph) {
  Field f = ph.hopf.field;
  return Document{f, std::move(ph)};
}
Document make_document(RotaBaxterOperator rb) {
  Field f = rb.hopf.field;
  return Document{f, std::move(rb)};
}
Document make_document(FactorizationInput fi) {
  Field f = fi.unit_factor.field();
  for (const Mat& m : fi.graded_factor) {
    if (!(m.field() == f)) throw InputError("factorization mixes fields");
  }
  return Document{f, std::move(fi)};
}
Document make_document(ModuleAction ma) {
  Field f = Field::rationals();
  for (const auto& row : ma.blocks) {
    for (const auto& st : row) {
      f = st.m.field();
      break;
    }
    break;
  }
  return Document{f, std::move(ma)};
}
Document make_document(MapFamily mf) {
  Field f = mf.blocks.empty() ? Field::rationals() : mf.blocks[0].field();
  return Document{f, std::move(mf)};
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("$", "expected an object");
  if (!j.contains("format_version")) fail("$", "missing key \"format_version\"");
  std::string version =
      expect_string(j.at("format_version"), "$.format_version");
  if (version != kFormatVersion) {
    fail("$.format_version", "unsupported version \"" + version + "\"");
  }
  if (!j.contains("kind")) fail("$", "missing key \"kind\"");
  std::string kind = expect_string(j.at("kind"), "$.kind");

  if (kind == "group") {
    expect_keys(j, "$", {"format_version", "kind", "payload"});
    return Document{Field::rationals(),
                    parse_group(j.at("payload"), "$.payload")};
  }

  expect_keys(j, "$", {"field", "format_version", "kind", "payload"});
  Field f = parse_field(j.at("field"), "$.field");
  const json& p = j.at("payload");
  if (kind == "hopf_pi_algebra") {
    return Document{f, parse_hopf_payload(p, "$.payload", f)};
  }
  if (kind == "brace") {
    return Document{f, parse_brace_payload(p, "$.payload", f)};
  }
  if (kind == "matched_pair") {
    return Document{f, parse_matched_pair_payload(p, "$.payload", f)};
  }
  if (kind == "post_hopf") {
    return Document{f, parse_post_hopf_payload(p, "$.payload", f)};
  }
  if (kind == "rota_baxter") {
    return Document{f, parse_rota_baxter_payload(p, "$.payload", f)};
  }
  if (kind == "factorization") {
    return Document{f, parse_factorization_payload(p, "$.payload", f)};
  }
  if (kind == "action") {
    return Document{f, parse_action_payload(p, "$.payload", f)};
  }
  fail("$.kind", "unknown kind \"" + kind + "\"");
}

std::string serialize_document(const Document& doc) {
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = doc.kind();
  if (!std::holds_alternative<FiniteGroup>(doc.value)) {
    j["field"] = field_json(doc.field);
  }
  j["payload"] = std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteGroup>) return group_json(v);
        else if constexpr (std::is_same_v<T, HopfPiAlgebra>)
          return hopf_payload_json(v);
        else if constexpr (std::is_same_v<T, HopfPiBrace>)
          return brace_payload_json(v);
        else if constexpr (std::is_same_v<T, MatchedPair>)
          return matched_pair_payload_json(v);
        else if constexpr (std::is_same_v<T, PostHopfStructure>)
          return post_hopf_payload_json(v);
        else if constexpr (std::is_same_v<T, RotaBaxterOperator>)
          return rota_baxter_payload_json(v);
        else if constexpr (std::is_same_v<T, FactorizationInput>)
          return factorization_payload_json(v);
        else
          return action_payload_json(v);
      },
      doc.value);
  return j.dump(2) + "\n";
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_document(const Document& doc, const std::string& path) {
  std::string text = serialize_document(doc);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out.good()) throw InputError("cannot write " + path);
}

CheckReport validate_document(const Document& doc) {
  return std::visit(
      [](const auto& v) -> CheckReport {
        using T = std::decay_t<decltype(v)>;
        CheckReport rep;
        if constexpr (std::is_same_v<T, HopfPiAlgebra>) {
          rep = check_hopf_pi_algebra(v);
          rep.merge(check_antipode_identities(v));
        } else if constexpr (std::is_same_v<T, HopfPiBrace>) {
          rep = check_brace(v);
          rep.merge(check_antipode_exchange(v));
          rep.merge(check_module_properties(v));
        } else if constexpr (std::is_same_v<T, MatchedPair>) {
          rep = check_matched_pair(v);
        } else if constexpr (std::is_same_v<T, PostHopfStructure>) {
          rep = check_post_hopf(v);
          rep.merge(check_post_hopf_derived(v));
        } else if constexpr (std::is_same_v<T, RotaBaxterOperator>) {
          rep = check_rb(v);
        }
        // Groups, factorization inputs, and actions are fully validated by
        // the parser; their report is empty and passing.
        return rep;
      },
      doc.value);
}

}  // namespace hopfpi
