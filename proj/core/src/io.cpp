// Copyright 2026 The Hermite Surface Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hermite/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace hermite {
namespace {

struct Token {
  std::string text;
  std::size_t offset = 0;
};

struct Line {
  std::vector<Token> tokens;
  std::size_t offset = 0;
};

[[noreturn]] void format_error(std::size_t offset, const std::string& what) {
  raise(ErrorKind::kFormat, "byte " + std::to_string(offset) + ": " + what);
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : text_(std::istreambuf_iterator<char>(in), {}) {}

  // Next non-blank, non-comment line; false at end of input.
  bool next(Line& line) {
    while (pos_ < text_.size()) {
      const std::size_t start = pos_;
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string::npos) end = text_.size();
      pos_ = end + 1;
      line.tokens.clear();
      line.offset = start;
      std::size_t i = start;
      while (i < end) {
        while (i < end && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
        if (i >= end) break;
        std::size_t j = i;
        while (j < end && !std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
        line.tokens.push_back({text_.substr(i, j - i), i});
        i = j;
      }
      if (line.tokens.empty() || line.tokens.front().text.front() == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t end_offset() const { return text_.size(); }

  void expect_header(const std::string& magic) {
    Line line;
    if (!next(line)) format_error(0, "empty input, expected '" + magic + " 1'");
    if (line.tokens.front().text != magic) format_error(line.offset, "expected header '" + magic + "'");
    if (line.tokens.size() != 2) format_error(line.offset, "header needs a version number");
    if (line.tokens[1].text != "1") format_error(line.tokens[1].offset, "unsupported version " + line.tokens[1].text);
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

double to_double(const Token& t) {
  double value = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) format_error(t.offset, "expected a number, got '" + t.text + "'");
  return value;
}

int to_int(const Token& t) {
  int value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) format_error(t.offset, "expected an integer, got '" + t.text + "'");
  return value;
}

int to_id(const Token& t) {
  const int id = to_int(t);
  if (id < 0) format_error(t.offset, "negative id");
  return id;
}

void expect_count(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    format_error(line.offset, "'" + line.tokens.front().text + "' record needs " + std::to_string(count - 1) +
                                  " fields, got " + std::to_string(line.tokens.size() - 1));
  }
}

Vec3 vec3_at(const Line& line, std::size_t first) {
  return {to_double(line.tokens[first]), to_double(line.tokens[first + 1]), to_double(line.tokens[first + 2])};
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(const Vec3& v) { return fmt(v.x()) + " " + fmt(v.y()) + " " + fmt(v.z()); }

}  // namespace

DomainTriangulation read_mesh(std::istream& in) {
  LineReader reader(in);
  reader.expect_header("hermite-mesh");
  DomainTriangulation tri;
  std::vector<bool> seen;
  Line line;
  while (reader.next(line)) {
    const std::string& kind = line.tokens.front().text;
    if (kind == "vertex") {
      expect_count(line, 4);
      const int id = to_id(line.tokens[1]);
      if (id >= static_cast<int>(tri.vertices.size())) {
        tri.vertices.resize(static_cast<std::size_t>(id) + 1, Vec2::Zero());
        seen.resize(static_cast<std::size_t>(id) + 1, false);
      }
      if (seen[id]) format_error(line.tokens[1].offset, "duplicate vertex " + std::to_string(id));
      seen[id] = true;
      tri.vertices[id] = Vec2(to_double(line.tokens[2]), to_double(line.tokens[3]));
    } else if (kind == "triangle") {
      expect_count(line, 4);
      tri.triangles.push_back({to_id(line.tokens[1]), to_id(line.tokens[2]), to_id(line.tokens[3])});
    } else if (kind == "identify") {
      expect_count(line, 3);
      tri.identifications.emplace_back(to_id(line.tokens[1]), to_id(line.tokens[2]));
    } else {
      format_error(line.offset, "unknown record '" + kind + "'");
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) format_error(reader.end_offset(), "vertex " + std::to_string(v) + " is missing");
  }
  for (const auto& t : tri.triangles) {
    for (int id : t) {
      if (id >= static_cast<int>(tri.vertices.size())) {
        format_error(reader.end_offset(), "triangle refers to unknown vertex " + std::to_string(id));
      }
    }
  }
  return tri;
}

void write_mesh(std::ostream& out, const DomainTriangulation& tri) {
  out << "hermite-mesh 1\n";
  for (std::size_t v = 0; v < tri.vertices.size(); ++v) {
    out << "vertex " << v << ' ' << fmt(tri.vertices[v].x()) << ' ' << fmt(tri.vertices[v].y()) << '\n';
  }
  for (const auto& t : tri.triangles) out << "triangle " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  for (const auto& [keep, merge] : tri.identifications) out << "identify " << keep << ' ' << merge << '\n';
}

HermiteFile read_hermite_file(std::istream& in) {
  LineReader reader(in);
  reader.expect_header("hermite-data");
  HermiteFile file;
  std::vector<bool> seen;
  Line line;
  while (reader.next(line)) {
    const std::string& kind = line.tokens.front().text;
    if (kind == "vertex") {
      expect_count(line, 16);
      const int id = to_id(line.tokens[1]);
      if (id >= static_cast<int>(file.vertices.size())) {
        file.vertices.resize(static_cast<std::size_t>(id) + 1);
        seen.resize(static_cast<std::size_t>(id) + 1, false);
      }
      if (seen[id]) format_error(line.tokens[1].offset, "duplicate vertex " + std::to_string(id));
      seen[id] = true;
      HermiteVertexDatum& d = file.vertices[id];
      d.P = vec3_at(line, 2);
      d.n = vec3_at(line, 5);
      d.u1 = vec3_at(line, 8);
      d.u2 = vec3_at(line, 11);
      d.kappa1 = to_double(line.tokens[14]);
      d.kappa2 = to_double(line.tokens[15]);
    } else if (kind == "edge") {
      expect_count(line, 6);
      const int a = to_id(line.tokens[1]);
      const int b = to_id(line.tokens[2]);
      if (!file.edges.emplace(std::minmax(a, b), vec3_at(line, 3)).second) {
        format_error(line.offset, "duplicate edge record");
      }
    } else if (kind == "triangle") {
      expect_count(line, 4);
      file.triangles.push_back({to_id(line.tokens[1]), to_id(line.tokens[2]), to_id(line.tokens[3])});
    } else {
      format_error(line.offset, "unknown record '" + kind + "'");
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) format_error(reader.end_offset(), "vertex " + std::to_string(v) + " is missing");
  }
  return file;
}

void write_hermite_file(std::ostream& out, const HermiteData& data, const Mesh& mesh, bool with_triangles) {
  out << "hermite-data 1\n";
  for (std::size_t v = 0; v < data.vertices.size(); ++v) {
    const auto& d = data.vertices[v];
    out << "vertex " << v << ' ' << fmt(d.P) << ' ' << fmt(d.n) << ' ' << fmt(d.u1) << ' ' << fmt(d.u2) << ' '
        << fmt(d.kappa1) << ' ' << fmt(d.kappa2) << '\n';
  }
  for (std::size_t e = 0; e < mesh.edges().size(); ++e) {
    out << "edge " << mesh.edge(static_cast<int>(e)).a << ' ' << mesh.edge(static_cast<int>(e)).b << ' '
        << fmt(data.midplanes[e].n_pi) << '\n';
  }
  if (with_triangles) {
    for (const auto& t : mesh.triangles()) out << "triangle " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
}

HermiteData resolve_hermite_data(const HermiteFile& file, const Mesh& mesh) {
  if (static_cast<int>(file.vertices.size()) != mesh.vertex_count()) {
    raise(ErrorKind::kFormat, "data has " + std::to_string(file.vertices.size()) + " vertices, mesh has " +
                                  std::to_string(mesh.vertex_count()));
  }
  HermiteData data;
  data.vertices = file.vertices;
  for (const auto& e : mesh.edges()) {
    auto it = file.edges.find({e.a, e.b});
    if (it == file.edges.end()) {
      raise(ErrorKind::kFormat, "missing edge record " + std::to_string(e.a) + " " + std::to_string(e.b));
    }
    data.midplanes.push_back({it->second});
  }
  return data;
}

void write_control_net(std::ostream& out, const Spline& spline) {
  out << "hermite-net 1\n";
  out << "patches " << spline.patches.size() << '\n';
  const Mesh& mesh = spline.mesh;
  for (int t = 0; t < static_cast<int>(spline.patches.size()); ++t) {
    const auto& tr = mesh.triangle(t);
    out << "patch " << t << " degree " << spline.patches[t].degree() << " vertices " << tr[0] << ' ' << tr[1] << ' '
        << tr[2];
    if (mesh.has_domain()) {
      out << " domain";
      for (const Vec2& p : mesh.corner_positions(t)) out << ' ' << fmt(p.x()) << ' ' << fmt(p.y());
    }
    out << '\n';
    for (const Vec3& c : spline.patches[t].values()) out << fmt(c) << '\n';
  }
}

Spline read_control_net(std::istream& in) {
  LineReader reader(in);
  reader.expect_header("hermite-net");
  Line line;
  if (!reader.next(line) || line.tokens.front().text != "patches") {
    format_error(line.offset, "expected 'patches <count>'");
  }
  expect_count(line, 2);
  const int count = to_id(line.tokens[1]);
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<Vec2, 3>> domain;
  std::vector<TriPatch> patches;
  int degree = -1;
  int with_domain = -1;
  for (int p = 0; p < count; ++p) {
    if (!reader.next(line)) format_error(reader.end_offset(), "expected " + std::to_string(count) + " patches");
    const auto& tk = line.tokens;
    if (tk.front().text != "patch") format_error(line.offset, "expected a patch record");
    if (tk.size() != 8 && tk.size() != 15) format_error(line.offset, "malformed patch record");
    if (tk[2].text != "degree") format_error(tk[2].offset, "expected 'degree'");
    if (tk[4].text != "vertices") format_error(tk[4].offset, "expected 'vertices'");
    if (to_id(tk[1]) != p) format_error(tk[1].offset, "patches must be listed in order");
    const int d = to_id(tk[3]);
    if (degree >= 0 && d != degree) {
      format_error(tk[3].offset, "patch degree " + std::to_string(d) + " differs from " + std::to_string(degree));
    }
    degree = d;
    triangles.push_back({to_id(tk[5]), to_id(tk[6]), to_id(tk[7])});
    const int has = tk.size() == 15 ? 1 : 0;
    if (with_domain >= 0 && has != with_domain) format_error(line.offset, "domain positions on some patches only");
    with_domain = has;
    if (has) {
      if (tk[8].text != "domain") format_error(tk[8].offset, "expected 'domain'");
      domain.push_back({Vec2(to_double(tk[9]), to_double(tk[10])), Vec2(to_double(tk[11]), to_double(tk[12])),
                        Vec2(to_double(tk[13]), to_double(tk[14]))});
    }
    TriPatch patch(d);
    for (auto& c : patch.values()) {
      if (!reader.next(line)) format_error(reader.end_offset(), "truncated control points");
      expect_count(line, 3);
      c = Vec3(to_double(line.tokens[0]), to_double(line.tokens[1]), to_double(line.tokens[2]));
    }
    patches.push_back(std::move(patch));
  }
  if (reader.next(line)) format_error(line.offset, "unexpected trailing record");
  int vertex_count = 0;
  for (const auto& t : triangles) vertex_count = std::max({vertex_count, t[0] + 1, t[1] + 1, t[2] + 1});
  Spline spline;
  spline.mesh = with_domain == 1 ? Mesh::from_triangles(vertex_count, triangles, domain)
                                 : Mesh::from_triangles(vertex_count, triangles);
  spline.patches = std::move(patches);
  return spline;
}

void write_obj(std::ostream& out, const Spline& spline, int density) {
  if (density < 1) raise(ErrorKind::kInvalidInput, "density must be positive");
  const int n = density;
  const int per_patch = (n + 1) * (n + 2) / 2;
  auto local = [n](int j, int k) {
    // Row-major over j (beta) then k (gamma), j + k <= n.
    return j * (n + 1) - j * (j - 1) / 2 + k;
  };
  out << "# hermite spline tessellation\n";
  for (const TriPatch& patch : spline.patches) {
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n - j; ++k) {
        const Bary b{static_cast<double>(n - j - k) / n, static_cast<double>(j) / n, static_cast<double>(k) / n};
        out << "v " << fmt(eval_patch(patch, b)) << '\n';
      }
    }
  }
  for (int t = 0; t < static_cast<int>(spline.patches.size()); ++t) {
    const int base = t * per_patch + 1;
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n - j; ++k) {
        out << "f " << base + local(j, k) << ' ' << base + local(j + 1, k) << ' ' << base + local(j, k + 1) << '\n';
        if (j + k + 2 <= n) {
          out << "f " << base + local(j + 1, k) << ' ' << base + local(j + 1, k + 1) << ' ' << base + local(j, k + 1)
              << '\n';
        }
      }
    }
  }
}

void write_convergence_csv(std::ostream& out, const ConvergenceResult& result) {
  out << "level,h,error\n";
  for (const auto& p : result.points) out << p.level << ',' << fmt(p.h) << ',' << fmt(p.error) << '\n';
}

}  // namespace hermite
