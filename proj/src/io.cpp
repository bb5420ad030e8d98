#include "steincq/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "steincq/errors.hpp"

namespace steincq {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim * dim)
    fail(Errc::parse_error, "matrix entry count does not match the dimension");
  Matrix m(dim, dim);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k, ++idx) {
      const json& e = j[idx];
      if (!e.is_array() || e.size() != 2) fail(Errc::parse_error, "matrix entries are [re, im]");
      m(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  return m;
}

json channel_json(const CqChannel& channel) {
  json out;
  out["alphabet_size"] = channel.alphabet_size();
  out["out_dim"] = channel.out_dim();
  json outputs = json::array();
  for (std::size_t x = 0; x < channel.alphabet_size(); ++x)
    outputs.push_back(matrix_to_json(channel.output(x)));
  out["outputs"] = std::move(outputs);
  return out;
}

CqChannel channel_from(const json& j) {
  if (!j.contains("alphabet_size") || !j.contains("out_dim") || !j.contains("outputs"))
    fail(Errc::parse_error, "channel spec needs alphabet_size, out_dim, outputs");
  const std::size_t ax = j["alphabet_size"].get<std::size_t>();
  const std::size_t d = j["out_dim"].get<std::size_t>();
  const json& outs = j["outputs"];
  if (!outs.is_array() || outs.size() != ax)
    fail(Errc::parse_error, "need one output matrix per letter");
  std::vector<DensityMatrix> states;
  states.reserve(ax);
  for (const json& o : outs) states.push_back(validate_density(matrix_from_json(o, d)));
  return CqChannel(ax, d, std::move(states));
}

json parse_file_or_text(const std::string& text_or_path) {
  std::string text = text_or_path;
  if (!text.empty() && text.front() != '{') {
    std::ifstream in(text_or_path);
    if (!in) fail(Errc::parse_error, "cannot open " + text_or_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, "invalid JSON");
  return j;
}

}  // namespace

CqChannel read_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return channel_from_json(ss.str());
}

void write_channel(const std::string& path, const CqChannel& channel) {
  std::ofstream out(path);
  if (!out) fail(Errc::parse_error, "cannot write " + path);
  out << channel_to_json(channel) << "\n";
}

std::string channel_to_json(const CqChannel& channel) { return channel_json(channel).dump(2); }

CqChannel channel_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, "invalid channel JSON");
  return channel_from(j);
}

FreeSetDescriptor read_free_set(const std::string& text_or_path) {
  const json j = parse_file_or_text(text_or_path);
  if (!j.contains("kind")) fail(Errc::parse_error, "free-set spec needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  const std::size_t n = j.value("n", std::size_t{1});
  const json params = j.value("params", json::object());
  if (kind == "replacer") {
    if (!params.contains("alphabet_size") || !params.contains("out_dim"))
      fail(Errc::parse_error, "replacer params need alphabet_size and out_dim");
    return FreeSetDescriptor::replacer(params["alphabet_size"].get<std::size_t>(),
                                       params["out_dim"].get<std::size_t>(), n);
  }
  if (kind == "singleton_iid") {
    if (params.contains("channel_file"))
      return FreeSetDescriptor::singleton_iid(read_channel(params["channel_file"]), n);
    if (params.contains("channel"))
      return FreeSetDescriptor::singleton_iid(channel_from(params["channel"]), n);
    fail(Errc::parse_error, "singleton params need channel or channel_file");
  }
  if (kind == "ppt_output") {
    if (!params.contains("alphabet_size"))
      fail(Errc::parse_error, "ppt params need alphabet_size");
    return FreeSetDescriptor::ppt_output(params["alphabet_size"].get<std::size_t>(), n);
  }
  if (kind == "lifted_state_set") {
    const std::string family = params.value("family", "ppt_2x2");
    if (family != "ppt_2x2") fail(Errc::parse_error, "unknown state family " + family);
    if (!params.contains("alphabet_size"))
      fail(Errc::parse_error, "lifted params need alphabet_size");
    return FreeSetDescriptor::lifted(params["alphabet_size"].get<std::size_t>(),
                                     ppt_2x2_family(), n);
  }
  fail(Errc::parse_error, "unknown free-set kind " + kind);
}

void write_recipe(const std::string& path, const SuperchannelRecipe& recipe) {
  json out;
  out["test_operator"] = matrix_to_json(recipe.test_operator);
  out["test_dim"] = recipe.test_operator.rows();
  out["probe_letter"] = recipe.probe_letter;
  out["channel_if_pass"] = channel_json(recipe.channel_if_pass);
  out["channel_if_fail"] = channel_json(recipe.channel_if_fail);
  std::ofstream f(path);
  if (!f) fail(Errc::parse_error, "cannot write " + path);
  f << out.dump(2) << "\n";
}

SuperchannelRecipe read_recipe(const std::string& path) {
  const json j = parse_file_or_text(path);
  if (!j.contains("test_operator") || !j.contains("channel_if_pass") ||
      !j.contains("channel_if_fail"))
    fail(Errc::parse_error, "recipe needs test_operator and both target channels");
  return build_superchannel(
      matrix_from_json(j["test_operator"], j.at("test_dim").get<std::size_t>()),
      j.value("probe_letter", std::size_t{0}), channel_from(j["channel_if_pass"]),
      channel_from(j["channel_if_fail"]));
}

void write_smoothed_channel(const std::string& path, const SmoothedChannel& sc) {
  json out;
  out["channel"] = channel_json(sc.channel);
  json projs = json::array();
  for (const Matrix& p : sc.projectors) projs.push_back(matrix_to_json(p));
  out["projectors"] = std::move(projs);
  out["dmax_bound"] = sc.dmax_bound;
  out["spec_count"] = sc.spec_count;
  out["copies"] = sc.copies;
  std::ofstream f(path);
  if (!f) fail(Errc::parse_error, "cannot write " + path);
  f << out.dump(2) << "\n";
}

}  // namespace steincq
