// Copyright 2026 The Authors.
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


#include "lawrence_cli/render.hpp"

#include <algorithm>
#include <vector>

namespace lawrence::cli {

namespace {

bool is_scalar(const Json& v) { return !v.is_array() && !v.is_object(); }

bool is_leaf(const Json& v) {
  if (is_scalar(v)) return true;
  if (!v.is_array()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& x) { return is_scalar(x); });
}

bool is_flat_row(const Json& v) {
  if (!v.is_object()) return false;
  for (const auto& [key, value] : v.items())
    if (!is_leaf(value)) return false;
  return true;
}

bool hidden(const Json& obj, const std::string& key) {
  if (key == "schema_version") return true;
  return obj.contains(key + "_text");
}

std::string label(const std::string& key) {
  const std::string suffix = "_text";
  if (key.size() > suffix.size() &&
      key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0)
    return key.substr(0, key.size() - suffix.size());
  return key;
}

std::string paint(const std::string& key, const std::string& text, bool color) {
  if (!color || key != "status") return text;
  const char* code = nullptr;
  if (text == "pass" || text == "ok") code = "32";
  if (text == "fail" || text == "error") code = "31";
  if (text == "skipped") code = "33";
  if (!code) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

class Writer {
 public:
  explicit Writer(bool color) : color_(color) {}

  void object(const Json& obj, std::size_t indent) {
    std::size_t width = 0;
    for (const auto& [key, value] : obj.items())
      if (!hidden(obj, key) && is_leaf(value)) width = std::max(width, label(key).size());
    for (const auto& [key, value] : obj.items()) {
      if (hidden(obj, key)) continue;
      const std::string name = label(key);
      if (is_leaf(value)) {
        std::string text = render_leaf(value);
        line(indent, name + std::string(width - name.size() + 2, ' ') +
                         paint(name, text, color_));
      } else if (value.is_object()) {
        line(indent, name + ":");
        object(value, indent + 2);
      } else {
        line(indent, name + ":");
        array(value, indent + 2);
      }
    }
  }

  std::string str() && { return std::move(out_); }

 private:
  void array(const Json& arr, std::size_t indent) {
    const bool rows = std::all_of(arr.begin(), arr.end(),
                                  [](const Json& x) { return is_flat_row(x); });
    if (rows) {
      table(arr, indent);
      return;
    }
    bool first = true;
    for (const auto& x : arr) {
      if (!first && !x.is_array()) out_ += "\n";
      first = false;
      if (is_leaf(x))
        line(indent, render_leaf(x));
      else if (x.is_object())
        object(x, indent);
      else
        array(x, indent + 2);
    }
  }

  void table(const Json& arr, std::size_t indent) {
    std::vector<std::string> keys;
    for (const auto& row : arr)
      for (const auto& [key, value] : row.items())
        if (!hidden(row, key) && std::find(keys.begin(), keys.end(), key) == keys.end())
          keys.push_back(key);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) width[k] = label(keys[k]).size();
    for (const auto& row : arr) {
      std::vector<std::string> r;
      for (std::size_t k = 0; k < keys.size(); ++k) {
        std::string text = row.contains(keys[k]) ? render_leaf(row[keys[k]]) : "-";
        width[k] = std::max(width[k], text.size());
        r.push_back(std::move(text));
      }
      cells.push_back(std::move(r));
    }
    auto emit = [&](const std::vector<std::string>& r, bool head) {
      std::string s;
      for (std::size_t k = 0; k < r.size(); ++k) {
        const std::string name = label(keys[k]);
        s += head ? r[k] : paint(name, r[k], color_);
        if (k + 1 < r.size()) s += std::string(width[k] - r[k].size() + 2, ' ');
      }
      line(indent, s);
    };
    std::vector<std::string> head;
    for (const auto& k : keys) head.push_back(label(k));
    emit(head, true);
    for (const auto& r : cells) emit(r, false);
  }

  void line(std::size_t indent, const std::string& s) {
    out_ += std::string(indent, ' ');
    out_ += s;
    while (!out_.empty() && out_.back() == ' ') out_.pop_back();
    out_ += "\n";
  }

  bool color_;
  std::string out_;
};

}  // namespace

std::string render_leaf(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    return s.empty() ? "-" : s;
  }
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += render_leaf(v[i]);
    }
    return out + "]";
  }
  return v.dump();
}

std::string render_text(const Json& doc, bool color) {
  Writer w(color);
  if (doc.is_object())
    w.object(doc, 0);
  else
    return render_leaf(doc) + "\n";
  return std::move(w).str();
}

}  // namespace lawrence::cli
