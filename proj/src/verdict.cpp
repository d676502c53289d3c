#include "iquot/verdict.hpp"

namespace iquot {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

Status worse(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::unknown || b == Status::unknown) return Status::unknown;
  return Status::pass;
}

}  // namespace iquot
