#include "qea/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qea {

using json = nlohmann::json;

namespace {

json matrices_to_json(const std::vector<Mat>& mats) {
  json arr = json::array();
  for (const Mat& m : mats) {
    json flat = json::array();
    for (std::uint32_t r = 0; r < m.rows(); ++r)
      for (std::uint32_t c = 0; c < m.cols(); ++c) flat.push_back(m.at(r, c));
    arr.push_back(std::move(flat));
  }
  return arr;
}

std::vector<Mat> matrices_from_json(const json& arr, const FieldCtx& ctx, std::uint32_t dim,
                                    const char* what) {
  if (!arr.is_array() || arr.size() != ctx.n())
    fail(ErrorKind::BadFile, std::string(what) + " must hold n matrices");
  std::vector<Mat> mats;
  for (const auto& flat : arr) {
    if (!flat.is_array() || flat.size() != std::size_t(dim) * dim)
      fail(ErrorKind::BadFile, std::string(what) + " matrix has wrong entry count");
    Mat m(ctx.base(), dim, dim);
    std::size_t k = 0;
    for (std::uint32_t r = 0; r < dim; ++r)
      for (std::uint32_t c = 0; c < dim; ++c, ++k) {
        std::int64_t v = flat[k].get<std::int64_t>();
        if (v < 0 || v >= std::int64_t(ctx.p()))
          fail(ErrorKind::BadFile,
               std::string(what) + " entry out of range [0, p): " + std::to_string(v));
        m.at(r, c) = ffelt(v);
      }
    mats.push_back(std::move(m));
  }
  return mats;
}

json header_json(const FieldCtx& ctx, std::uint32_t dim) {
  json j;
  j["schema"] = 1;
  j["p"] = ctx.p();
  j["ell"] = ctx.ell();
  j["q"] = ctx.q();
  j["n"] = ctx.n();
  j["dim"] = dim;
  return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

const FieldCtx& LoadedModule::ctx() const {
  if (a) return a->ctx();
  if (r) return r->ctx;
  return rq->ctx;
}

std::uint32_t LoadedModule::dim() const {
  if (a) return a->dim();
  if (r) return r->dim();
  return rq->dim();
}

std::string module_to_json(const ModuleRep& M, const std::string& label) {
  json j = header_json(M.ctx(), M.dim());
  j["kind"] = "module";
  j["type"] = "A";
  j["X"] = matrices_to_json(M.X_all());
  j["g"] = matrices_to_json(M.g_all());
  if (!label.empty()) j["label"] = label;
  return dump_canonical(j);
}

std::string rmodule_to_json(const RModule& M, const std::string& label) {
  json j = header_json(M.ctx, M.dim());
  j["kind"] = "module";
  j["type"] = "R";
  j["X"] = matrices_to_json(M.X);
  if (!label.empty()) j["label"] = label;
  return dump_canonical(j);
}

std::string rqmodule_to_json(const RqModule& M, const std::string& label) {
  json j = header_json(M.ctx, M.dim());
  j["kind"] = "module";
  j["type"] = "Rq";
  j["Y"] = matrices_to_json(M.Y);
  if (!label.empty()) j["label"] = label;
  return dump_canonical(j);
}

LoadedModule module_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::BadFile, std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("kind", "") != "module")
    fail(ErrorKind::BadFile, "expected a module file (kind == \"module\")");
  if (j.value("schema", 0) != 1)
    fail(ErrorKind::BadFile, "unsupported schema version");
  for (const char* key : {"p", "ell", "n", "q", "dim"})
    if (!j.contains(key) || !j[key].is_number_unsigned())
      fail(ErrorKind::BadFile, std::string("missing or bad field: ") + key);

  FieldCtx ctx = FieldCtx::make(j["p"].get<std::uint32_t>(), j["ell"].get<std::uint32_t>(),
                                j["n"].get<std::uint32_t>());
  if (j["q"].get<std::uint32_t>() != ctx.q())
    fail(ErrorKind::BadFile, "stored q is inconsistent with (p, ell): expected " +
                                 std::to_string(ctx.q()));
  std::uint32_t dim = j["dim"].get<std::uint32_t>();
  std::string type = j.value("type", "A");

  LoadedModule lm;
  lm.label = j.value("label", "");
  if (type == "A") {
    lm.kind = ModuleKind::kA;
    auto X = matrices_from_json(j.at("X"), ctx, dim, "X");
    auto g = matrices_from_json(j.at("g"), ctx, dim, "g");
    lm.a = ModuleRep::checked(ctx, std::move(X), std::move(g));
  } else if (type == "R") {
    lm.kind = ModuleKind::kR;
    RModule m{ctx, matrices_from_json(j.at("X"), ctx, dim, "X")};
    m.validate();
    lm.r = std::move(m);
  } else if (type == "Rq") {
    lm.kind = ModuleKind::kRq;
    RqModule m{ctx, matrices_from_json(j.at("Y"), ctx, dim, "Y")};
    m.validate();
    lm.rq = std::move(m);
  } else {
    fail(ErrorKind::BadFile, "unknown module type: " + type);
  }
  return lm;
}

std::string variety_to_json(const FieldCtx& ctx, const VarietySet& V, const std::string& kind) {
  json j;
  j["schema"] = 1;
  j["kind"] = kind;
  j["p"] = ctx.p();
  j["ell"] = ctx.ell();
  j["q"] = ctx.q();
  j["n"] = ctx.n();
  json degrees = json::array();
  for (auto& [e, pts] : V.degrees) {
    FieldPtr f = ctx.extension(e);
    json d;
    d["e"] = e;
    json mp = json::array();
    for (auto c : f->minpoly()) mp.push_back(c);
    d["minpoly"] = std::move(mp);
    json points = json::array();
    for (auto& coords : pts) {
      json pt = json::array();
      for (ffelt c : coords) {
        json digits = json::array();
        for (std::uint32_t i = 0; i < e; ++i) digits.push_back(f->coeff(c, i));
        pt.push_back(std::move(digits));
      }
      points.push_back(std::move(pt));
    }
    d["points"] = std::move(points);
    degrees.push_back(std::move(d));
  }
  j["degrees"] = std::move(degrees);
  return dump_canonical(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::BadFile, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::BadFile, "cannot write " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(ErrorKind::BadFile, "cannot move " + tmp + " into place");
}

}  // namespace qea
