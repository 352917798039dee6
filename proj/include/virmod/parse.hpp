#pragma once

#include <string>
#include <variant>

#include "virmod/cm_compat.hpp"
#include "virmod/loopmod.hpp"
#include "virmod/pbw.hpp"
#include "virmod/structure.hpp"

namespace virmod {

// Grammar (whitespace-insensitive between tokens):
//   element  := '0' | ['-'] term (('+'|'-') term)*
//   term     := [scalar '*'?] monomial '|vac>' ['(x)' 't^' int]
//   monomial := ('d(' int ')' ('^' nat)? '*'?)*
//   scalar   := rational | '(' rational ')' '+' '(' rational ')' 'i'
//   rational := ['-'] nat ('/' nat)?
// Syntax errors carry the offending position; indices are checked against the
// active vacuum spec and level.

Scalar parse_scalar(const std::string& text);

ModuleElement parse_module_element(const std::string& text, const VacuumSpec& spec, Level level);
LoopElement parse_loop_element(const std::string& text, const VacuumSpec& spec,
                               Level level = Level::W);

// Picks by the presence of a loop part '(x) t^n'.
std::variant<ModuleElement, LoopElement> parse_element(const std::string& text,
                                                       const VacuumSpec& spec,
                                                       Level level = Level::W);

// vac(r=1; 3, 5)
VacuumSpec parse_vacuum(const std::string& text);

// L(vac(..); lambda=..; a=..; b=..) | N(vac(..); a=..; twist=..) | A(a=..; b=..)
// | L0(a=..; bprime=..) | L1(a=..; bprime=..) | E(lambda=..; b=..; gamma=..; p=..)
std::variant<ModuleDescriptor, EParams> parse_descriptor(const std::string& text);

// dmax=2,bmax=2,win=3,fuel=4,kmax=3 (any subset, any order)
TruncationProfile parse_profile(const std::string& text);

std::string render(const Scalar& s);
std::string render(const Monomial& m);
std::string render(const ModuleElement& v);
std::string render(const LoopElement& v);
std::string render(const VacuumSpec& spec);
std::string render(const ModuleDescriptor& d);
std::string render(const EParams& e);

}  // namespace virmod
