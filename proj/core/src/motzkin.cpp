#include "qpart/motzkin.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "qpart/error.hpp"

namespace qpart {

namespace {

const char* kind_name(StepKind k) {
  switch (k) {
    case StepKind::NE: return "NE";
    case StepKind::SE: return "SE";
    case StepKind::E: return "E";
  }
  return "?";
}

std::string label_text(const Step& s) {
  return std::to_string(s.label) + (s.starred ? "*" : "");
}

}  // namespace

void validate(const LabeledMotzkinPath& path) {
  int height = 0;
  for (std::size_t idx = 0; idx < path.steps.size(); ++idx) {
    const Step& s = path.steps[idx];
    const std::string where = "step " + std::to_string(idx + 1) + ": ";
    if (s.starred && s.kind != StepKind::E) {
      throw ValidationError(where + "only E steps may be starred");
    }
    switch (s.kind) {
      case StepKind::NE:
        if (s.label != 1) throw ValidationError(where + "NE steps carry label 1");
        ++height;
        break;
      case StepKind::SE:
        if (s.label < 1 || s.label > height) {
          throw ValidationError(where + "SE label " + std::to_string(s.label) +
                                " outside [1, " + std::to_string(height) + "]");
        }
        --height;
        break;
      case StepKind::E:
        if (s.starred) {
          if (s.label != 1) throw ValidationError(where + "starred E steps carry label 1");
        } else if (s.label < 1 || s.label > height) {
          throw ValidationError(where + "E label " + std::to_string(s.label) + " outside [1, " +
                                std::to_string(height) + "]");
        }
        break;
    }
  }
  if (height != 0) {
    throw ValidationError("path ends at height " + std::to_string(height) + ", expected 0");
  }
}

bool is_valid(const LabeledMotzkinPath& path) noexcept {
  try {
    validate(path);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

LabeledMotzkinPath encode(const SetPartition& p) {
  const TraceProfile t = trace_profile(p);
  LabeledMotzkinPath path;
  path.steps.reserve(static_cast<std::size_t>(p.size()));
  for (Element i = 1; i <= p.size(); ++i) {
    switch (t.kind(i)) {
      case ElementKind::Opener: path.steps.push_back({StepKind::NE, 1, false}); break;
      case ElementKind::Singleton: path.steps.push_back({StepKind::E, 1, true}); break;
      case ElementKind::Closer: path.steps.push_back({StepKind::SE, t.g(i), false}); break;
      case ElementKind::Passant: path.steps.push_back({StepKind::E, t.g(i), false}); break;
    }
  }
  return path;
}

SetPartition decode(const LabeledMotzkinPath& path) {
  validate(path);
  std::vector<ElementKind> kinds;
  std::vector<int> gamma;
  kinds.reserve(path.steps.size());
  gamma.reserve(path.steps.size());
  int height = 0;
  for (const Step& s : path.steps) {
    switch (s.kind) {
      case StepKind::NE:
        kinds.push_back(ElementKind::Opener);
        gamma.push_back(height + 1);
        ++height;
        break;
      case StepKind::SE:
        kinds.push_back(ElementKind::Closer);
        gamma.push_back(s.label);
        --height;
        break;
      case StepKind::E:
        kinds.push_back(s.starred ? ElementKind::Singleton : ElementKind::Passant);
        gamma.push_back(s.starred ? height + 1 : s.label);
        break;
    }
  }
  return rebuild_from_profile(kinds, gamma);
}

LabeledMotzkinPath reflect(const LabeledMotzkinPath& path) {
  validate(path);
  // SE labels queued by the height the step leaves, in path order.
  std::vector<std::vector<int>> down_labels(1);
  int height = 0;
  for (const Step& s : path.steps) {
    if (s.kind == StepKind::NE) {
      ++height;
      if (down_labels.size() <= static_cast<std::size_t>(height)) down_labels.resize(static_cast<std::size_t>(height) + 1);
    } else if (s.kind == StepKind::SE) {
      down_labels[static_cast<std::size_t>(height)].push_back(s.label);
      --height;
    }
  }

  LabeledMotzkinPath out;
  out.steps.assign(path.steps.rbegin(), path.steps.rend());
  std::vector<std::size_t> next(down_labels.size(), 0);
  height = 0;
  for (Step& s : out.steps) {
    if (s.kind == StepKind::NE) {
      s.kind = StepKind::SE;
      auto& queue = down_labels[static_cast<std::size_t>(height)];
      auto& at = next[static_cast<std::size_t>(height)];
      if (at >= queue.size()) throw ConsistencyError("reflect: unbalanced levels in " + to_string(path));
      s.label = queue[at++];
      --height;
    } else if (s.kind == StepKind::SE) {
      s.kind = StepKind::NE;
      s.label = 1;
      ++height;
    }
  }
  if (!is_valid(out)) throw ConsistencyError("reflect produced an invalid path: " + to_string(out));
  return out;
}

std::string to_string(const LabeledMotzkinPath& path) {
  std::string out;
  for (const Step& s : path.steps) {
    if (!out.empty()) out += ' ';
    out += kind_name(s.kind);
    out += '(' + label_text(s) + ')';
  }
  return out;
}

LabeledMotzkinPath parse_path(std::string_view text) {
  LabeledMotzkinPath path;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  skip();
  while (pos < text.size()) {
    Step s;
    if (text.substr(pos, 2) == "NE") {
      s.kind = StepKind::NE;
      pos += 2;
    } else if (text.substr(pos, 2) == "SE") {
      s.kind = StepKind::SE;
      pos += 2;
    } else if (text[pos] == 'E') {
      s.kind = StepKind::E;
      pos += 1;
    } else {
      throw ParseError("expected NE, SE or E", pos);
    }
    expect('(');
    const std::size_t start = pos;
    int label = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      label = label * 10 + (text[pos] - '0');
      if (label > 1'000'000) throw ParseError("label too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a label", pos);
    s.label = label;
    if (pos < text.size() && text[pos] == '*') {
      s.starred = true;
      ++pos;
    }
    expect(')');
    path.steps.push_back(s);
    skip();
  }
  return path;
}

std::string to_json(const LabeledMotzkinPath& path) {
  nlohmann::json steps = nlohmann::json::array();
  for (const Step& s : path.steps) {
    steps.push_back({{"kind", kind_name(s.kind)}, {"label", s.label}, {"starred", s.starred}});
  }
  return nlohmann::json{{"steps", steps}}.dump();
}

LabeledMotzkinPath path_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed path JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array()) {
    throw ValidationError("path JSON needs a \"steps\" array");
  }
  LabeledMotzkinPath path;
  for (const auto& item : j["steps"]) {
    const std::string idx = std::to_string(path.steps.size() + 1);
    if (!item.is_object() || !item.contains("kind") || !item["kind"].is_string() ||
        !item.contains("label") || !item["label"].is_number_integer()) {
      throw ValidationError("step " + idx + ": needs string \"kind\" and integer \"label\"");
    }
    Step s;
    const auto kind = item["kind"].get<std::string>();
    if (kind == "NE") {
      s.kind = StepKind::NE;
    } else if (kind == "SE") {
      s.kind = StepKind::SE;
    } else if (kind == "E") {
      s.kind = StepKind::E;
    } else {
      throw ValidationError("step " + idx + ": unknown kind \"" + kind + "\"");
    }
    s.label = item["label"].get<int>();
    if (item.contains("starred")) {
      if (!item["starred"].is_boolean()) {
        throw ValidationError("step " + idx + ": \"starred\" must be a boolean");
      }
      s.starred = item["starred"].get<bool>();
    }
    path.steps.push_back(s);
  }
  return path;
}

std::string render_ascii(const LabeledMotzkinPath& path) {
  if (path.steps.empty()) return {};
  std::size_t width = 1;
  int height = 0;
  int top = 0;
  for (const Step& s : path.steps) {
    width = std::max(width, label_text(s).size());
    if (s.kind == StepKind::NE) ++height;
    if (s.kind == StepKind::SE) --height;
    top = std::max(top, height);
  }
  const std::size_t columns = path.steps.size() * (width + 1);
  std::vector<std::string> rows(static_cast<std::size_t>(top) + 1, std::string(columns, ' '));
  std::string labels(columns, ' ');

  height = 0;
  for (std::size_t idx = 0; idx < path.steps.size(); ++idx) {
    const Step& s = path.steps[idx];
    const std::size_t col = idx * (width + 1);
    int row = height;
    char glyph = '_';
    if (s.kind == StepKind::NE) {
      glyph = '/';
      ++height;
    } else if (s.kind == StepKind::SE) {
      glyph = '\\';
      --height;
      row = height;
    }
    rows[static_cast<std::size_t>(row)][col] = glyph;
    const std::string text = label_text(s);
    labels.replace(col, text.size(), text);
  }

  std::string out;
  auto emit = [&out](std::string line) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  };
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) emit(*it);
  emit(labels);
  return out;
}

}  // namespace qpart
