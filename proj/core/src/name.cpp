#include "vndn/name.hpp"

#include <stdexcept>

namespace vndn {

namespace {

std::vector<std::string> split_components(const std::string& text)
{
  if (text.empty() || text[0] != '/')
    throw std::invalid_argument("bad name \"" + text + "\": must start with '/'");
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 1; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '/') {
      if (cur.empty())
        throw std::invalid_argument("bad name \"" + text + "\": empty component");
      out.push_back(cur);
      cur.clear();
    }
    else {
      cur.push_back(text[i]);
    }
  }
  return out;
}

} // namespace

std::string ContentName::to_string() const
{
  std::string out;
  for (const auto& c : prefix) {
    out += '/';
    out += c;
  }
  out += "/seg=" + std::to_string(segment);
  return out;
}

ContentName ContentName::parse(const std::string& text)
{
  auto comps = split_components(text);
  if (comps.empty() || comps.back().rfind("seg=", 0) != 0)
    throw std::invalid_argument("bad name \"" + text + "\": missing seg=N component");
  std::string seg = comps.back().substr(4);
  comps.pop_back();
  if (comps.empty())
    throw std::invalid_argument("bad name \"" + text + "\": empty prefix");
  ContentName n;
  n.prefix = std::move(comps);
  try {
    std::size_t pos = 0;
    n.segment = std::stoull(seg, &pos);
    if (pos != seg.size())
      throw std::invalid_argument("");
  }
  catch (const std::exception&) {
    throw std::invalid_argument("bad name \"" + text + "\": bad segment \"" + seg + "\"");
  }
  return n;
}

std::string NamePrefix::to_string() const
{
  std::string out;
  for (const auto& c : components) {
    out += '/';
    out += c;
  }
  return out;
}

NamePrefix NamePrefix::parse(const std::string& text)
{
  NamePrefix p;
  p.components = split_components(text);
  return p;
}

NamePrefix prefix_of(const ContentName& name)
{
  return NamePrefix{name.prefix};
}

bool name_matches(const NamePrefix& entry_prefix, const ContentName& name)
{
  if (entry_prefix.components.size() > name.prefix.size())
    return false;
  for (std::size_t i = 0; i < entry_prefix.components.size(); ++i) {
    if (entry_prefix.components[i] != name.prefix[i])
      return false;
  }
  return true;
}

} // namespace vndn
