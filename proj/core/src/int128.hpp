#pragma once

namespace levy::detail {

__extension__ typedef __int128 i128;

}  // namespace levy::detail
