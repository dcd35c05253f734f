// Copyright 2026 The curvlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "curvlab/svg.hpp"

#include <cmath>
#include <cstdio>

#include "curvlab/error.hpp"

namespace curvlab::svg {

std::string fixed(double v, int digits) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

Document::Document(double width_mm, double height_mm) : width_(width_mm), height_(height_mm) {}

void Document::add_param(const std::string& key, const std::string& value) {
  // "--" may not appear inside an XML comment.
  if (key.find("--") != std::string::npos || value.find("--") != std::string::npos) {
    throw DomainError("parameter text may not contain '--'");
  }
  params_.emplace_back(key, value);
}

void Document::declare_class(const std::string& name, const std::string& css) {
  classes_[name] = css;
}

void Document::require(const std::string& cls) const {
  if (!classes_.contains(cls)) throw StateError("undeclared SVG class '" + cls + "'");
}

void Document::line(const std::string& cls, double x1, double y1, double x2, double y2) {
  require(cls);
  elements_.push_back("<line class=\"" + cls + "\" x1=\"" + fixed(x1) + "\" y1=\"" + fixed(y1) +
                      "\" x2=\"" + fixed(x2) + "\" y2=\"" + fixed(y2) + "\"/>");
}

void Document::circle(const std::string& cls, double cx, double cy, double r) {
  require(cls);
  elements_.push_back("<circle class=\"" + cls + "\" cx=\"" + fixed(cx) + "\" cy=\"" +
                      fixed(cy) + "\" r=\"" + fixed(r) + "\"/>");
}

namespace {

std::string points_attr(const std::vector<std::pair<double, double>>& pts) {
  std::string s;
  for (const auto& [x, y] : pts) {
    if (!s.empty()) s += ' ';
    s += fixed(x) + "," + fixed(y);
  }
  return s;
}

}  // namespace

void Document::polygon(const std::string& cls, const std::vector<std::pair<double, double>>& pts,
                       const std::string& id) {
  require(cls);
  std::string e = "<polygon class=\"" + cls + "\"";
  if (!id.empty()) e += " id=\"" + escape(id) + "\"";
  elements_.push_back(e + " points=\"" + points_attr(pts) + "\"/>");
}

void Document::polyline(const std::string& cls,
                        const std::vector<std::pair<double, double>>& pts) {
  require(cls);
  elements_.push_back("<polyline class=\"" + cls + "\" points=\"" + points_attr(pts) + "\"/>");
}

void Document::path(const std::string& cls, const std::string& d) {
  require(cls);
  elements_.push_back("<path class=\"" + cls + "\" d=\"" + d + "\"/>");
}

void Document::text(const std::string& cls, double x, double y, const std::string& body) {
  require(cls);
  elements_.push_back("<text class=\"" + cls + "\" x=\"" + fixed(x) + "\" y=\"" + fixed(y) +
                      "\">" + escape(body) + "</text>");
}

std::string Document::str() const {
  const std::string w = fixed(width_);
  const std::string h = fixed(height_);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  for (const auto& [k, v] : params_) out += "<!-- curvlab:" + k + "=" + v + " -->\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "mm\" height=\"" + h +
         "mm\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  if (!title_.empty()) out += "<title>" + escape(title_) + "</title>\n";
  out += "<style>\n";
  for (const auto& [name, css] : classes_) out += "." + name + " { " + css + " }\n";
  out += "</style>\n";
  for (const std::string& e : elements_) out += e + "\n";
  out += "</svg>\n";
  return out;
}

}  // namespace curvlab::svg
