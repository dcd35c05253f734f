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

#pragma once

#include <map>
#include <string>
#include <vector>

namespace curvlab::svg {

/// Fixed-point text with `digits` fractional digits, trailing zeros and a
/// trailing point trimmed, and negative zero printed as "0".
std::string fixed(double v, int digits = 6);

/// Deterministic SVG writer. One user unit is one millimetre. Elements are
/// emitted in insertion order after the style block; callers insert them in
/// a sorted order.
class Document {
 public:
  Document(double width_mm, double height_mm);

  /// Free-form <title>.
  void set_title(std::string title) { title_ = std::move(title); }
  /// Emitted as <!-- curvlab:key=value --> lines ahead of the drawing.
  void add_param(const std::string& key, const std::string& value);
  /// Declares a stroke class; every class used by an element must be
  /// declared.
  void declare_class(const std::string& name, const std::string& css);

  void line(const std::string& cls, double x1, double y1, double x2, double y2);
  void circle(const std::string& cls, double cx, double cy, double r);
  void polygon(const std::string& cls, const std::vector<std::pair<double, double>>& pts,
               const std::string& id = "");
  void polyline(const std::string& cls, const std::vector<std::pair<double, double>>& pts);
  void path(const std::string& cls, const std::string& d);
  void text(const std::string& cls, double x, double y, const std::string& body);

  std::string str() const;

 private:
  void require(const std::string& cls) const;

  double width_;
  double height_;
  std::string title_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::map<std::string, std::string> classes_;
  std::vector<std::string> elements_;
};

/// Escapes &, <, >, and " for XML text and attributes.
std::string escape(const std::string& text);

}  // namespace curvlab::svg
