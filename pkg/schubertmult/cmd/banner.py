# -*- coding: utf-8 -*-

"""figlet -f smslant <message>"""
BANNER = """
   ____    __         __          __  __  ___     ____
  / __/___/ /  __ __ / /  ___ ___/ /_/  |/  /_ __/ / /_
 _\\ \\/ __/ _ \\/ // // _ \\/ -_) __/ __/ /|_/ / // / / __/
/___/\\__/_//_/\\_,_//_.__/\\__/_/  \\__/_/  /_/\\_,_/_/\\__/
"""
