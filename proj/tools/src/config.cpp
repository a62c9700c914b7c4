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

#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hermite::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string where(const std::string& source, int line) {
  return line > 0 ? source + ":" + std::to_string(line) : source;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& field, const std::string& what)
    : std::runtime_error(where(source, line) + ": field '" + field + "': " + what), line_(line), field_(field) {}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "scheme",        "surface",      "mesh",         "data",          "density",
      "metric_density", "obj",         "net",          "report",        "csv",
      "levels",        "base_cells",   "torus.major",  "torus.minor",   "sphere.radius",
      "plane.origin",  "plane.du",     "plane.dv",     "plane.lo",      "plane.hi",
      "tol.c1",        "tol.g1_normal", "tol.g1_identity", "tol.position", "tol.normal",
      "tol.curvature"};
  return keys;
}

Config Config::parse(std::istream& in, const std::string& source) {
  Config cfg;
  cfg.source_ = source;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = trim(raw.substr(0, raw.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError(source, line, body, "expected key = value");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError(source, line, key, "unknown field");
    }
    if (value.empty()) throw ConfigError(source, line, key, "empty value");
    if (cfg.has(key)) throw ConfigError(source, line, key, "duplicate field");
    cfg.entries_[key] = {value, line};
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "config", "cannot open file");
  return parse(in, path);
}

void Config::set(const std::string& key, const std::string& value) { entries_[key] = {value, 0}; }

void Config::fail(const std::string& key, const std::string& what) const {
  const auto it = entries_.find(key);
  throw ConfigError(source_, it == entries_.end() ? 0 : it->second.line, key, what);
}

std::string Config::text(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) fail(key, "missing required field");
  return it->second.value;
}

std::string Config::text(const std::string& key, const std::string& fallback) const {
  return has(key) ? text(key) : fallback;
}

int Config::integer(const std::string& key, int fallback) const {
  if (!has(key)) return fallback;
  std::istringstream in(text(key));
  int value = 0;
  std::string rest;
  if (!(in >> value) || (in >> rest)) fail(key, "expected an integer");
  return value;
}

double Config::real(const std::string& key, double fallback) const {
  if (!has(key)) return fallback;
  return numbers(key, 1)[0];
}

Vec2 Config::vec2(const std::string& key, const Vec2& fallback) const {
  if (!has(key)) return fallback;
  const auto v = numbers(key, 2);
  return {v[0], v[1]};
}

Vec3 Config::vec3(const std::string& key, const Vec3& fallback) const {
  if (!has(key)) return fallback;
  const auto v = numbers(key, 3);
  return {v[0], v[1], v[2]};
}

std::vector<std::string> Config::words(const std::string& key, const std::string& fallback) const {
  std::istringstream in(text(key, fallback));
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<double> Config::numbers(const std::string& key, std::size_t count) const {
  std::istringstream in(text(key));
  std::vector<double> out;
  for (std::string w; in >> w;) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(w, &used));
      if (used != w.size()) fail(key, "not a number: " + w);
    } catch (const std::logic_error&) {
      fail(key, "not a number: " + w);
    }
  }
  if (out.size() != count) fail(key, "expected " + std::to_string(count) + " number(s)");
  return out;
}

}  // namespace hermite::cli
